#include "etainv/heat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "etainv/errors.hpp"

namespace etainv {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

int principal_m_cutoff(const SpectralParams& p, double t, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("truncation policy: eps_tail must be in (0, 1)");
    }
    const double beta = 1.0 + 1.0 / (p.r * p.r);
    const double bound = std::sqrt(std::log(1.0 / eps) / (beta * t));
    int M = 2 * static_cast<int>(std::ceil((bound + 1.0) / 2.0)) + 2;
    return M;
}

double h_principal(double t, const SpectralParams& p, double tau,
                   const TruncationPolicy& policy) {
    if (!(t > 0.0)) throw std::invalid_argument("h_principal: t must be > 0");
    const int M = principal_m_cutoff(p, t, policy.eps_tail);
    if (M > policy.max_terms) {
        throw truncation_error("h_principal: m-cutoff exceeds max_terms");
    }
    const double r = p.r;
    const double beta = 1.0 + 1.0 / (r * r);
    double acc = 0.0;
    for (int m = -M; m <= M; m += 2) {
        const double rad = (m - 1.0) * (m - 1.0) * beta + 4.0 * tau * tau;
        const double root = std::sqrt(rad);
        const double lp = -0.5 * r + root;
        const double lm = -0.5 * r - root;
        acc += lp * std::exp(-t * lp * lp) + lm * std::exp(-t * lm * lm);
    }
    return acc;
}

bool series_form_in_regime(double t, const SpectralParams& p) {
    return t > 0.0 && t <= 1.0 && p.r <= 1.0;
}

double h_principal_series_form(double t, const SpectralParams& p, double tau,
                               const TruncationPolicy& policy, int K) {
    if (!(t > 0.0)) throw std::invalid_argument("series form: t must be > 0");
    if (K < 1) throw std::invalid_argument("series form: K >= 1");
    const double r = p.r;
    const double beta = 1.0 + 1.0 / (r * r);
    const int M = principal_m_cutoff(p, t, policy.eps_tail);
    const double rt = r * t;
    double acc = 0.0;
    for (int m = -M; m <= M; m += 2) {
        const double I2 = (m - 1.0) * (m - 1.0) * beta + 4.0 * tau * tau;
        // sum_k (-r (rt)^{2k}/(2k)! + 2 (rt)^{2k-1}/(2k-1)!) I^{2k}
        double series = -r;  // k = 0; the (rt)^{2k-1} piece vanishes there
        double even_pow = 1.0;  // (rt)^{2k}/(2k)!
        for (int k = 1; k <= K; ++k) {
            const double odd_pow = even_pow * rt / (2.0 * k - 1.0);  // (rt)^{2k-1}/(2k-1)!
            even_pow = odd_pow * rt / (2.0 * k);                     // (rt)^{2k}/(2k)!
            series += (-r * even_pow + 2.0 * odd_pow) * std::pow(I2, k);
        }
        acc += std::exp(-(m - 1.0) * (m - 1.0) * beta * t) * series;
    }
    return std::exp(-0.25 * r * r * t - 4.0 * tau * tau * t) * acc;
}

double h_principal_series_bound(double t, const SpectralParams& p, double tau,
                                const TruncationPolicy& policy) {
    const double r = p.r;
    const double beta = 1.0 + 1.0 / (r * r);
    const int M = principal_m_cutoff(p, t, policy.eps_tail);
    double acc = 0.0;
    for (int m = -M; m <= M; m += 2) {
        const double I2 = (m - 1.0) * (m - 1.0) * beta + 4.0 * tau * tau;
        acc += std::exp(-(m - 1.0) * (m - 1.0) * beta * t) *
               (1.0 + I2 + std::exp(I2 * r * t));
    }
    return 2.0 * r * std::exp(-0.25 * r * r * t - 4.0 * tau * tau * t) * acc;
}

double h_discrete(double t, const SpectralParams& p, int n,
                  const TruncationPolicy& policy) {
    if (!(t > 0.0)) throw std::invalid_argument("h_discrete: t must be > 0");
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("h_discrete: n even >= 2");
    const double r = p.r;
    const double lam_n = -0.5 * r + (1.0 - n) / r;
    double acc = lam_n * std::exp(-t * lam_n * lam_n);
    long terms = 0;
    for (int m = n + 2;; m += 2) {
        const double rad =
            (m - 1.0) * (m - 1.0) * (1.0 + 1.0 / (r * r)) - (n - 1.0) * (n - 1.0);
        const double root = std::sqrt(rad);
        const double lp = -0.5 * r + root;
        const double lm = -0.5 * r - root;
        const double tp = lp * std::exp(-t * lp * lp);
        const double tm = lm * std::exp(-t * lm * lm);
        acc += tp + tm;
        if (std::abs(tp) + std::abs(tm) < policy.eps_tail * (1.0 + std::abs(acc))) break;
        if (++terms > policy.max_terms) {
            throw truncation_error("h_discrete: max_terms reached before eps_tail");
        }
    }
    return acc;
}

double poisson_theta(int p, double t, const SpectralParams& params, PoissonSide side,
                     const TruncationPolicy& policy) {
    if (p < 0) throw std::invalid_argument("poisson_theta: p >= 0");
    if (!(t > 0.0)) throw std::invalid_argument("poisson_theta: t > 0");
    const double r = params.r;
    const double beta = 1.0 + 1.0 / (r * r);
    if (side == PoissonSide::lhs) {
        const int M = principal_m_cutoff(params, t, policy.eps_tail);
        double acc = 0.0;
        for (int m = -M; m <= M; m += 2) {
            const double q = (m - 1.0) * (m - 1.0);
            acc += std::pow(q * beta, p) * std::exp(-q * beta * t);
        }
        return acc;
    }
    // Dual side: (-1)^p d_t^p sum_k (-1)^k (sqrt(pi)/(2 sqrt(beta t)))
    // e^{-pi^2 k^2 / (4 beta t)}. Each term is t^{-1/2} e^{-c/t} up to a
    // constant; p derivatives expand in closed form through
    // d_t [t^a e^{-c/t}] = (a t^{a-1} + c t^{a-2}) e^{-c/t}.
    const double front = std::sqrt(kPi) / (2.0 * std::sqrt(beta));
    double acc = 0.0;
    for (int k = 0;; ++k) {
        const double c = kPi * kPi * k * k / (4.0 * beta);
        // coefficients over powers t^{-1/2 - j}, j = 0..p
        std::vector<std::pair<double, double>> terms{{1.0, -0.5}};
        for (int d = 0; d < p; ++d) {
            std::vector<std::pair<double, double>> next;
            for (auto [coef, a] : terms) {
                next.emplace_back(coef * a, a - 1.0);
                if (c != 0.0) next.emplace_back(coef * c, a - 2.0);
            }
            terms = std::move(next);
        }
        double val = 0.0;
        for (auto [coef, a] : terms) val += coef * std::pow(t, a);
        val *= std::exp(-c / t) * front * (k % 2 == 0 ? 1.0 : -1.0) * (k == 0 ? 1.0 : 2.0);
        const double sign_p = (p % 2 == 0) ? 1.0 : -1.0;
        acc += sign_p * val;
        if (k > 0 && std::abs(val) < policy.eps_tail * (1.0 + std::abs(acc))) break;
        if (k > 10000) {
            throw truncation_error("poisson_theta: dual sum budget");
        }
    }
    return acc;
}

double tr_discrete_part(double t, const SpectralParams& p, const SurfaceData& surface,
                        const TruncationPolicy& policy) {
    surface.validate();
    if (surface.spin.eps_k != 1) {
        throw std::domain_error("tr_discrete_part: requires fiber-trivial spin (eps_k = +1)");
    }
    const double volfac = 2.0 * surface.genus - 2.0 + surface.kappa;  // vol/(2 pi)
    const int kt = surface.kappa_trivial();
    double acc = 0.0;
    long terms = 0;
    for (int n = 2;; n += 2) {
        const double hn = h_discrete(t, p, n, policy);
        const double w = volfac * (n - 1.0) - kt;
        acc += 2.0 * w * hn;  // n and -n
        const double lam_n = minimal_ktype_eigenvalue(p, n);
        if (std::exp(-t * lam_n * lam_n) * (std::abs(w) + 1.0) <
            policy.eps_tail * (1.0 + std::abs(acc))) {
            break;
        }
        if (++terms > policy.max_terms) {
            throw truncation_error("tr_discrete_part: max_terms reached");
        }
    }
    return acc;
}

double AsymptoticFit::eval(double t) const {
    double v = 0.0;
    for (size_t i = 0; i < exponents.size(); ++i) {
        double b = std::pow(t, exponents[i].power);
        if (exponents[i].has_log) b *= std::log(t);
        v += coefficients[i] * b;
    }
    return v;
}

double AsymptoticFit::coefficient(double power, bool has_log) const {
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i].has_log == has_log &&
            std::abs(exponents[i].power - power) < 1e-12) {
            return coefficients[i];
        }
    }
    return 0.0;
}

AsymptoticFit fit_small_time(const std::vector<std::pair<double, double>>& samples,
                             const std::vector<FitTerm>& terms,
                             double weight_power) {
    const size_t m = samples.size();
    const size_t n = terms.size();
    if (m < 2 * n) {
        throw std::invalid_argument("fit_small_time: need >= 2x samples as coefficients");
    }
    double log_mean = 0.0;
    for (const auto& s : samples) {
        if (!(s.first > 0.0)) throw std::invalid_argument("fit_small_time: t > 0");
        log_mean += std::log(s.first);
    }
    const double t0 = std::exp(log_mean / static_cast<double>(m));

    // weighted design matrix with (t/t0)-normalized powers
    std::vector<double> A(m * n);
    std::vector<double> b(m);
    for (size_t i = 0; i < m; ++i) {
        const double t = samples[i].first;
        const double w = std::pow(t / t0, weight_power);
        for (size_t j = 0; j < n; ++j) {
            double v = std::pow(t / t0, terms[j].power);
            if (terms[j].has_log) v *= std::log(t);
            A[i * n + j] = w * v;
        }
        b[i] = w * samples[i].second;
    }
    // column scaling
    std::vector<double> colsc(n, 1.0);
    for (size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (size_t i = 0; i < m; ++i) s += A[i * n + j] * A[i * n + j];
        colsc[j] = s > 0.0 ? std::sqrt(s) : 1.0;
        for (size_t i = 0; i < m; ++i) A[i * n + j] /= colsc[j];
    }
    // Householder QR in place; b receives Q^T b.
    std::vector<double> rdiag(n);
    for (size_t k = 0; k < n; ++k) {
        double nrm = 0.0;
        for (size_t i = k; i < m; ++i) nrm = std::hypot(nrm, A[i * n + k]);
        if (nrm == 0.0) throw fit_error("fit_small_time: rank-deficient basis");
        if (A[k * n + k] < 0.0) nrm = -nrm;
        for (size_t i = k; i < m; ++i) A[i * n + k] /= nrm;
        A[k * n + k] += 1.0;
        for (size_t j = k + 1; j < n; ++j) {
            double s = 0.0;
            for (size_t i = k; i < m; ++i) s += A[i * n + k] * A[i * n + j];
            s = -s / A[k * n + k];
            for (size_t i = k; i < m; ++i) A[i * n + j] += s * A[i * n + k];
        }
        double s = 0.0;
        for (size_t i = k; i < m; ++i) s += A[i * n + k] * b[i];
        s = -s / A[k * n + k];
        for (size_t i = k; i < m; ++i) b[i] += s * A[i * n + k];
        rdiag[k] = -nrm;
    }
    // back substitution
    std::vector<double> x(n);
    for (size_t jj = n; jj-- > 0;) {
        double s = b[jj];
        for (size_t j = jj + 1; j < n; ++j) s -= A[jj * n + j] * x[j];
        x[jj] = s / rdiag[jj];
    }
    double rmin = std::abs(rdiag[0]), rmax = std::abs(rdiag[0]);
    for (size_t j = 1; j < n; ++j) {
        rmin = std::min(rmin, std::abs(rdiag[j]));
        rmax = std::max(rmax, std::abs(rdiag[j]));
    }

    AsymptoticFit fit;
    fit.exponents = terms;
    fit.coefficients.resize(n);
    for (size_t j = 0; j < n; ++j) {
        fit.coefficients[j] = x[j] / colsc[j] / std::pow(t0, terms[j].power);
    }
    fit.cond = rmin > 0.0 ? rmax / rmin : std::numeric_limits<double>::infinity();
    fit.ill_conditioned = fit.cond > 1e12;
    for (const auto& s : samples) {
        const double d = std::abs(s.second - fit.eval(s.first));
        fit.residual = std::max(fit.residual, d);
        if (s.second != 0.0) {
            fit.rel_residual = std::max(fit.rel_residual, d / std::abs(s.second));
        }
    }
    return fit;
}

}  // namespace etainv
