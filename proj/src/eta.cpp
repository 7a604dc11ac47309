#include "etainv/eta.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "etainv/errors.hpp"
#include "etainv/specfn.hpp"

namespace etainv {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require_fiber_trivial(const SurfaceData& surface, const char* who) {
    if (surface.spin.eps_k != 1) {
        throw std::domain_error(std::string(who) +
                                ": eta components require eps_k = +1");
    }
}

cplx cpow(double base, cplx e) { return std::exp(e * std::log(base)); }

// exp(z) - 1 with small-|z| series to keep the (q-a)^{-s} - (q+a)^{-s}
// difference cancellation-safe.
cplx cexpm1(cplx z) {
    if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
    cplx term = z, acc = z;
    for (int k = 2; k <= 24; ++k) {
        term *= z / static_cast<double>(k);
        acc += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
    }
    return acc;
}

// (q - a)^{-s} - (q + a)^{-s} = (q+a)^{-s} expm1(-s log1p(-2a/(q+a))).
cplx qdiff(double q, double a, cplx s) {
    const double lr = std::log1p(-2.0 * a / (q + a));
    return std::exp(-s * std::log(q + a)) * cexpm1(-s * lr);
}

// Coefficients c_i of P(l) = sum_{k<l} (2k-1)^p as a polynomial in u = 2l-1,
// via 2^p (B_{p+1}(u/2) - B_{p+1}(1/2)) / (p+1).
std::vector<double> p_poly_coeffs(int p) {
    const int n = p + 1;
    std::vector<double> c(n + 1, 0.0);
    double binom = 1.0;  // C(n, i)
    for (int i = 0; i <= n; ++i) {
        c[i] = binom * specfn::bernoulli_number(n - i) * std::pow(2.0, p - i) / n;
        binom *= static_cast<double>(n - i) / (i + 1.0);
    }
    // B_n(1/2) = (2^{1-n} - 1) B_n
    c[0] -= std::pow(2.0, p) * (std::pow(2.0, 1 - n) - 1.0) *
            specfn::bernoulli_number(n) / n;
    return c;
}

// sum over odd u >= 2 L0 - 1 of u^{-w} = 2^{-w} zeta(w, L0 - 1/2).
cplx odd_tail(cplx w, int L0) {
    return cpow(2.0, -w) * specfn::hurwitz_zeta(w, L0 - 0.5);
}

constexpr int kHeadL0 = 40;

// S_j(w) = sum_{l >= 2} (2l-1)^{-w-2j} P_j(l), head summed directly and tail
// through the polynomial coefficients against Hurwitz zetas.
cplx S_j(cplx w, int j, bool weighted) {
    const int pw = weighted ? 2 * j + 1 : 2 * j;
    cplx head = 0.0;
    double P = 0.0;  // running sum_{k<l} (2k-1)^{pw}
    for (int l = 2; l < kHeadL0; ++l) {
        P += std::pow(2.0 * (l - 1) - 1.0, pw);
        head += cpow(2.0 * l - 1.0, -(w + 2.0 * j)) * P;
    }
    const std::vector<double> c = p_poly_coeffs(pw);
    cplx tail = 0.0;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] == 0.0) continue;
        const cplx arg = w + 2.0 * j - static_cast<double>(i);
        if (std::abs(arg - 1.0) < 1e-11) {
            throw pole_error("h_qsum_continued: evaluation point on the pole set");
        }
        tail += c[i] * odd_tail(arg, kHeadL0);
    }
    return head + tail;
}

}  // namespace

double QIndex::q(const SpectralParams& p) const {
    const double r2 = p.r * p.r;
    return std::sqrt((2.0 * l - 1.0) * (2.0 * l - 1.0) * (1.0 + r2) -
                     r2 * (2.0 * k - 1.0) * (2.0 * k - 1.0));
}

namespace detail {

cplx h_qsum_continued(const SpectralParams& p, cplx w, bool weighted,
                      const TruncationPolicy& policy) {
    const double r2 = p.r * p.r;
    const double y = r2 / (1.0 + r2);
    (void)policy;
    cplx acc = 0.0;
    cplx poch = 1.0;  // (w/2)_j / j! * y^j
    for (int j = 0;; ++j) {
        if (j > 0) poch *= (w / 2.0 + (j - 1.0)) / static_cast<double>(j) * y;
        const cplx term = poch * S_j(w, j, weighted);
        acc += term;
        if (j > 4 && std::abs(term) < 1e-17 * (1.0 + std::abs(acc))) break;
        // the polynomial coefficients need Bernoulli numbers up to B_{2j+2}
        if (j > 78) {
            throw truncation_error("h_qsum_continued: binomial series budget");
        }
    }
    return cpow(1.0 + r2, -w / 2.0) * acc;
}

double h_qsum_residue_at_1(const SpectralParams& p, bool weighted) {
    const double r2 = p.r * p.r;
    const double y = r2 / (1.0 + r2);
    double acc = 0.0;
    double poch = 1.0;  // (1/2)_j / j! * y^j
    for (int j = 0;; ++j) {
        if (j > 0) poch *= (0.5 + (j - 1.0)) / static_cast<double>(j) * y;
        const int pw = weighted ? 2 * j + 1 : 2 * j;
        const std::vector<double> c = p_poly_coeffs(pw);
        const double term = poch * c[2 * j] * 0.5;  // residue of the i = 2j zeta
        acc += term;
        if (j > 4 && std::abs(term) < 1e-17 * (1.0 + std::abs(acc))) break;
        if (j > 78) throw truncation_error("h_qsum_residue_at_1: series budget");
    }
    return acc / std::sqrt(1.0 + r2);
}

DirectSum fg_direct(const SpectralParams& p, cplx s, bool weighted, long l_max,
                    bool accelerated) {
    const double r2 = p.r * p.r;
    const double a = 0.5 * r2;
    cplx acc = 0.0;
    std::vector<long> fit_ls;
    std::vector<cplx> fit_vals;
    const long spacing = std::max<long>(20, l_max / 50);
    cplx F = 0.0;
    for (long l = 2; l <= l_max; ++l) {
        F = 0.0;
        for (long k = 1; k < l; ++k) {
            const double q = std::sqrt((2.0 * l - 1.0) * (2.0 * l - 1.0) * (1.0 + r2) -
                                       r2 * (2.0 * k - 1.0) * (2.0 * k - 1.0));
            const double wk = weighted ? 2.0 * k - 1.0 : 1.0;
            F += wk * qdiff(q, a, s);
        }
        acc += F;
        if (accelerated && l > l_max - 5 * spacing && (l_max - l) % spacing == 0) {
            fit_ls.push_back(l);
            fit_vals.push_back(F);
        }
    }
    DirectSum out{acc, std::abs(F) * static_cast<double>(l_max)};
    if (!accelerated) return out;

    // Tail: F(l) ~ sum_i A_i (2l-1)^{1-s-i}; solve the 5x5 system on the
    // trailing samples, then sum_{l>L} (2l-1)^{-w} = 2^{-w} zeta(w, L+1/2).
    const int nfit = static_cast<int>(fit_ls.size());
    std::vector<cplx> M(nfit * nfit), rhs(fit_vals);
    for (int i = 0; i < nfit; ++i) {
        for (int j = 0; j < nfit; ++j) {
            M[i * nfit + j] = cpow(2.0 * fit_ls[i] - 1.0, 1.0 - s - static_cast<double>(j));
        }
    }
    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < nfit; ++col) {
        int piv = col;
        for (int i = col + 1; i < nfit; ++i) {
            if (std::abs(M[i * nfit + col]) > std::abs(M[piv * nfit + col])) piv = i;
        }
        for (int j = 0; j < nfit; ++j) std::swap(M[col * nfit + j], M[piv * nfit + j]);
        std::swap(rhs[col], rhs[piv]);
        for (int i = col + 1; i < nfit; ++i) {
            const cplx f = M[i * nfit + col] / M[col * nfit + col];
            for (int j = col; j < nfit; ++j) M[i * nfit + j] -= f * M[col * nfit + j];
            rhs[i] -= f * rhs[col];
        }
    }
    std::vector<cplx> A(nfit);
    for (int i = nfit - 1; i >= 0; --i) {
        cplx v = rhs[i];
        for (int j = i + 1; j < nfit; ++j) v -= M[i * nfit + j] * A[j];
        A[i] = v / M[i * nfit + i];
    }
    cplx tail = 0.0;
    for (int j = 0; j < nfit; ++j) {
        const cplx w = s - 1.0 + static_cast<double>(j);
        tail += A[j] * cpow(2.0, -w) * specfn::hurwitz_zeta(w, l_max + 0.5);
    }
    out.value += tail;
    // error: size of the last tail-basis contribution
    out.err_estimate = std::abs(A[nfit - 1] *
                                cpow(2.0, -(s + 3.0)) *
                                specfn::hurwitz_zeta(s + 3.0, l_max + 0.5)) +
                       1e-15 * std::abs(out.value);
    return out;
}

double mellin_eta_at_zero(const std::function<double(double)>& theta,
                          const std::vector<FitTerm>& terms, double window_lo,
                          double window_hi, double t_infty,
                          const quad::QuadratureSpec& qspec, double* residue_r0,
                          double* err_estimate, AsymptoticFit* fit_out) {
    const int npts = std::max<int>(30, 2 * static_cast<int>(terms.size()) + 10);
    std::vector<std::pair<double, double>> samples;
    samples.reserve(npts);
    const double ratio = std::log(window_hi / window_lo);
    for (int i = 0; i < npts; ++i) {
        const double t = window_lo * std::exp(ratio * i / (npts - 1.0));
        samples.emplace_back(t, theta(t));
    }
    AsymptoticFit fit = fit_small_time(samples, terms, 1.5);
    if (fit.rel_residual > 1e-6) {
        throw fit_error("mellin_eta_at_zero: fit residual too large");
    }
    if (fit_out) *fit_out = fit;

    // regularized value at s=0 of int_0^1 t^{(s-1)/2} t^a (log t)^L dt; the
    // bare t^{-1/2} term is the dropped pole.
    double combo = 0.0;
    double r0 = 0.0;
    for (size_t i = 0; i < terms.size(); ++i) {
        const double al = terms[i].power;
        const double ci = fit.coefficients[i];
        if (!terms[i].has_log && std::abs(al + 0.5) < 1e-12) {
            r0 = 2.0 * ci;
            continue;
        }
        combo += terms[i].has_log ? ci * (-4.0 / ((1.0 + 2.0 * al) * (1.0 + 2.0 * al)))
                                  : ci * (2.0 / (1.0 + 2.0 * al));
    }
    const double tcut = 0.6 * window_hi;
    auto rem_f = [&](double t) { return (theta(t) - fit.eval(t)) / std::sqrt(t); };
    auto big_f = [&](double t) { return theta(t) / std::sqrt(t); };
    const auto rem = quad::integrate(rem_f, tcut, 1.0, qspec, 1e-9);
    const auto big = quad::integrate(big_f, 1.0, std::max(1.5, t_infty), qspec, 1e-10);
    if (residue_r0) *residue_r0 = r0;
    if (err_estimate) {
        // dominant sensitivity: the t^{-3/2} coefficient error against the
        // regularized cutoff, with coefficient errors ~ rel_residual-scaled
        double c_sing = 0.0;
        for (size_t i = 0; i < terms.size(); ++i) {
            if (!terms[i].has_log && std::abs(terms[i].power + 1.5) < 1e-12) {
                c_sing = std::abs(fit.coefficients[i]);
            }
        }
        *err_estimate = (fit.rel_residual * c_sing / tcut + rem.err_estimate +
                         big.err_estimate) /
                        std::sqrt(kPi);
    }
    return (combo + rem.value + big.value) / std::sqrt(kPi);
}

}  // namespace detail

EtaResult eta_d1(const SpectralParams& p, const SurfaceData& surface, cplx s) {
    surface.validate();
    require_fiber_trivial(surface, "eta_d1");
    if (std::abs(s - cplx(1.0)) < 1e-13 || std::abs(s - cplx(2.0)) < 1e-13) {
        throw pole_error("eta_d1: simple poles at s = 1, 2");
    }
    const double a = 0.5 * p.r * p.r;
    const double chi = 2.0 - 2.0 * surface.genus - surface.kappa;
    const int kt = surface.kappa_trivial();
    const cplx rs = cpow(p.r, s);
    EtaResult out;
    out.value = 2.0 * chi * rs * (specfn::zeta0(s - 1.0, a) - a * specfn::zeta0(s, a)) +
                2.0 * kt * rs * specfn::zeta0(s, a);
    out.s = s;
    out.component = EtaComponent::d1;
    out.err_estimate = 1e-13 * std::abs(out.value);
    return out;
}

double eta_d1_mellin_oracle(const SpectralParams& p, const SurfaceData& surface,
                            const quad::QuadratureSpec& qspec,
                            const TruncationPolicy& policy) {
    surface.validate();
    require_fiber_trivial(surface, "eta_d1_mellin_oracle");
    const double r = p.r;
    const double volfac = 2.0 * surface.genus - 2.0 + surface.kappa;
    const int kt = surface.kappa_trivial();
    auto theta = [&](double t) {
        double acc = 0.0;
        for (long k = 1;; ++k) {
            const double lam = -(2.0 * k - 1.0 + 0.5 * r * r) / r;
            const double term =
                (2.0 * volfac * (2.0 * k - 1.0) - 2.0 * kt) * lam * std::exp(-t * lam * lam);
            acc += term;
            if (std::abs(term) < policy.eps_tail * (1.0 + std::abs(acc)) && k > 2) break;
            if (k > policy.max_terms) {
                throw truncation_error("eta_d1_mellin_oracle: theta sum budget");
            }
        }
        return acc;
    };
    const std::vector<FitTerm> terms = {{-1.5, false}, {-1.0, false}, {-0.5, false},
                                        {0.0, false},  {0.5, false},  {1.0, false},
                                        {1.5, false},  {2.0, false},  {2.5, false}};
    const double shi = kPi * kPi / (4.0 * 40.0);
    const double lam1 = (1.0 + 0.5 * r * r) / r;
    const double t_inf = 1.0 + std::log(1e18) / (lam1 * lam1);
    return detail::mellin_eta_at_zero(theta, terms, r * r * shi / 3000.0, r * r * shi,
                                      t_inf, qspec, nullptr, nullptr);
}

EtaResult eta_d2_direct(const SpectralParams& p, const SurfaceData& surface, cplx s,
                        const TruncationPolicy& policy) {
    surface.validate();
    require_fiber_trivial(surface, "eta_d2_direct");
    if (s.real() <= 2.5) {
        throw std::domain_error("eta_d2_direct: requires Re(s) > 2.5");
    }
    const double volfac = 2.0 * surface.genus - 2.0 + surface.kappa;
    const int kt = surface.kappa_trivial();
    // outer-l budget: the inner k-sum is complete, ~250 terms amortized
    const long l_max = std::min<long>(4000, policy.max_terms / 250);
    if (l_max < 200) {
        throw truncation_error("eta_d2_direct: max_terms budget too small");
    }
    const detail::DirectSum f = detail::fg_direct(p, s, true, l_max, true);
    const detail::DirectSum g =
        kt > 0 ? detail::fg_direct(p, s, false, l_max, true) : detail::DirectSum{0.0, 0.0};
    const cplx rs = cpow(p.r, s);
    EtaResult out;
    out.value = 2.0 * volfac * rs * f.value - 2.0 * kt * rs * g.value;
    out.s = s;
    out.component = EtaComponent::d2;
    out.err_estimate =
        2.0 * volfac * f.err_estimate + 2.0 * kt * g.err_estimate;
    return out;
}

cplx eta_d2_continued(const SpectralParams& p, const SurfaceData& surface, cplx s,
                      const TruncationPolicy& policy) {
    surface.validate();
    require_fiber_trivial(surface, "eta_d2_continued");
    const double volfac = 2.0 * surface.genus - 2.0 + surface.kappa;
    const int kt = surface.kappa_trivial();
    const double a = 0.5 * p.r * p.r;
    auto fg = [&](bool weighted) {
        cplx acc = 0.0;
        cplx poch = s;  // (s)_j / j!
        double apow = a;
        for (int j = 1; j <= 11; j += 2) {
            const cplx term =
                2.0 * poch * apow * detail::h_qsum_continued(p, s + static_cast<double>(j),
                                                             weighted, policy);
            acc += term;
            if (std::abs(term) < 1e-16 * (1.0 + std::abs(acc))) break;
            poch *= (s + static_cast<double>(j)) * (s + static_cast<double>(j + 1)) /
                    ((j + 1.0) * (j + 2.0));
            apow *= a * a;
        }
        return acc;
    };
    const cplx rs = cpow(p.r, s);
    const cplx f = fg(true);
    const cplx g = kt > 0 ? fg(false) : cplx(0.0);
    return 2.0 * volfac * rs * f - 2.0 * kt * rs * g;
}

EtaResult eta_d2_at_zero(const SpectralParams& p, const SurfaceData& surface,
                         const TruncationPolicy& policy) {
    surface.validate();
    require_fiber_trivial(surface, "eta_d2_at_zero");
    if (p.r > 0.5) {
        throw std::domain_error("eta_d2_at_zero: requires r <= 0.5");
    }
    const double volfac = 2.0 * surface.genus - 2.0 + surface.kappa;
    const int kt = surface.kappa_trivial();
    const double r2 = p.r * p.r;

    // At s = 0 only the j = 1 binomial term survives, through the residue of
    // the weighted q-power sum at argument 1.
    const double res_w = detail::h_qsum_residue_at_1(p, true);
    const double res_1 = kt > 0 ? detail::h_qsum_residue_at_1(p, false) : 0.0;
    const double value = 2.0 * volfac * r2 * res_w - 2.0 * kt * r2 * res_1;

    // Laurent diagnostic: (s-1) h(s) extrapolated s -> 1 must reproduce the
    // residue.
    double worst = 0.0;
    for (bool weighted : {true, false}) {
        if (!weighted && kt == 0) continue;
        const double exact = weighted ? res_w : res_1;
        double prev = 0.0;
        double extrap = 0.0;
        const double e0 = 1e-3;
        for (int i = 0; i < 2; ++i) {
            const double eps = e0 / (i + 1.0);
            const cplx v = detail::h_qsum_continued(p, cplx(1.0 + eps), weighted, policy);
            const double le = eps * v.real();
            if (i == 0) {
                prev = le;
            } else {
                extrap = 2.0 * le - prev;  // removes the linear-in-eps part
            }
        }
        worst = std::max(worst, std::abs(extrap - exact));
    }
    if (worst > 1e-6) {
        throw fit_error("eta_d2_at_zero: Laurent continuation diagnostic failed");
    }

    EtaResult out;
    out.value = value;
    out.s = 0.0;
    out.component = EtaComponent::d2;
    out.err_estimate = worst + 1e-14 * std::abs(value);
    return out;
}

namespace {

std::vector<FitTerm> trp_template(int kt, int kappa) {
    if (kt > 0) {
        return {{-1.5, false}, {-1.0, false}, {-1.0, true}, {-0.5, false},
                {0.0, false},  {0.0, true},   {0.5, false}, {1.0, false},
                {1.0, true},   {1.5, false}};
    }
    if (kappa > 0) {
        return {{-1.5, false}, {-1.0, false}, {-0.5, false}, {0.0, false},
                {0.5, false},  {1.0, false},  {1.5, false},  {2.0, false}};
    }
    return {{-1.5, false}, {-0.5, false}, {0.5, false}, {1.5, false}, {2.5, false}};
}

}  // namespace

EtaResult eta_p_regularized(const SpectralParams& p, const SurfaceData& surface,
                            const std::vector<HyperbolicClass>& classes,
                            const quad::QuadratureSpec& qspec,
                            const TruncationPolicy& policy, JWeightMode mode,
                            AsymptoticFit* fit_out) {
    surface.validate();
    require_fiber_trivial(surface, "eta_p_regularized");
    const int kt = surface.kappa_trivial();
    const double beta = 1.0 + 1.0 / (p.r * p.r);

    // Power/log template is valid below the scale where the Poisson-dual
    // corrections e^{-pi^2/(4 beta t)} become visible.
    const double t_hi = kPi * kPi / (4.0 * beta * 27.5);
    auto theta = [&](double t) {
        return tr_principal_part(t, p, surface, classes, qspec, policy, mode);
    };
    const double gap = -0.5 * p.r + std::sqrt(beta);
    const double t_inf = 1.0 + std::log(1e16) / (gap * gap);
    double r0 = 0.0, err = 0.0;
    const double value =
        detail::mellin_eta_at_zero(theta, trp_template(kt, surface.kappa), t_hi / 100.0,
                                   t_hi, t_inf, qspec, &r0, &err, fit_out);
    EtaResult out;
    out.value = value;
    out.s = 0.0;
    out.component = EtaComponent::p;
    out.pole_subtracted = true;
    out.residue_r0 = r0;
    out.err_estimate = err;
    return out;
}

EtaResult eta_total(const SpectralParams& p, const SurfaceData& surface,
                    const std::vector<HyperbolicClass>& classes,
                    const quad::QuadratureSpec& qspec, const TruncationPolicy& policy,
                    JWeightMode mode) {
    const EtaResult d1 = eta_d1(p, surface, 0.0);
    const EtaResult d2 = eta_d2_at_zero(p, surface, policy);
    const EtaResult ep = eta_p_regularized(p, surface, classes, qspec, policy, mode);
    EtaResult out;
    out.value = d1.value + d2.value + ep.value;
    out.s = 0.0;
    out.component = EtaComponent::total;
    out.pole_subtracted = ep.pole_subtracted;
    out.residue_r0 = ep.residue_r0;
    out.err_estimate = std::sqrt(d1.err_estimate * d1.err_estimate +
                                 d2.err_estimate * d2.err_estimate +
                                 ep.err_estimate * ep.err_estimate);
    return out;
}

SweepResult adiabatic_sweep(const std::vector<double>& r_list, const SurfaceData& surface,
                            const std::vector<HyperbolicClass>& classes,
                            const quad::QuadratureSpec& qspec,
                            const TruncationPolicy& policy, JWeightMode mode) {
    if (r_list.empty()) throw std::invalid_argument("adiabatic_sweep: empty r list");
    for (size_t i = 0; i < r_list.size(); ++i) {
        if (!(r_list[i] > 0.0) || r_list[i] > 0.5) {
            throw std::invalid_argument("adiabatic_sweep: need 0 < r <= 0.5");
        }
        if (i > 0 && r_list[i] >= r_list[i - 1]) {
            throw std::invalid_argument("adiabatic_sweep: r_list must be decreasing");
        }
    }
    surface.validate();

    SweepResult out;
    out.rows.resize(r_list.size());
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("ETA_NUM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    const unsigned nthreads = std::min<unsigned>(hw, static_cast<unsigned>(r_list.size()));

    auto work = [&](size_t idx) {
        const SpectralParams pr(r_list[idx]);
        const EtaResult d1 = eta_d1(pr, surface, 0.0);
        const EtaResult d2 = eta_d2_at_zero(pr, surface, policy);
        const EtaResult ep = eta_p_regularized(pr, surface, classes, qspec, policy, mode);
        SweepRow row;
        row.r = r_list[idx];
        row.eta_d1 = d1.value.real();
        row.eta_d2 = d2.value.real();
        row.eta_p = ep.value.real();
        row.eta_total = row.eta_d1 + row.eta_d2 + row.eta_p;
        row.err_estimate = d1.err_estimate + d2.err_estimate + ep.err_estimate;
        out.rows[idx] = row;
    };
    if (nthreads <= 1) {
        for (size_t i = 0; i < r_list.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (unsigned tdx = 0; tdx < nthreads; ++tdx) {
            pool.emplace_back([&]() {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= out.rows.size()) break;
                    work(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Richardson (Neville) in x = r^2 on eta_total.
    std::vector<double> x(r_list.size()), T(r_list.size());
    for (size_t i = 0; i < r_list.size(); ++i) {
        x[i] = r_list[i] * r_list[i];
        T[i] = out.rows[i].eta_total;
    }
    for (size_t k = 1; k < T.size(); ++k) {
        for (size_t i = 0; i + k < T.size(); ++i) {
            T[i] = (x[i] * T[i + 1] - x[i + k] * T[i]) / (x[i] - x[i + k]);
        }
    }
    out.extrapolated = T[0];
    out.limit = (2.0 - 2.0 * surface.genus - surface.kappa) / 6.0;
    return out;
}

}  // namespace etainv
