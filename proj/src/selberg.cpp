#include "etainv/selberg.hpp"

#include <cmath>
#include <stdexcept>

#include "etainv/errors.hpp"
#include "etainv/specfn.hpp"

namespace etainv {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLog2 = 0.693147180559945309417232121458176568;

// lambda_+- e^{-t lambda_+-^2} trace of the principal block m.
double block_heat_trace(double t, double r, double beta, int m, double tau) {
    const double rad = (m - 1.0) * (m - 1.0) * beta + 4.0 * tau * tau;
    const double root = std::sqrt(rad);
    const double lp = -0.5 * r + root;
    const double lm = -0.5 * r - root;
    return lp * std::exp(-t * lp * lp) + lm * std::exp(-t * lm * lm);
}

// Diagonal entries (slot1, slot2) of B e^{-tB^2} for the principal block m.
std::pair<double, double> block_heat_diag(double t, double r, double beta,
                                          double half_ell, int m, double tau) {
    const double rad = (m - 1.0) * (m - 1.0) * beta + 4.0 * tau * tau;
    const double root = std::sqrt(rad);
    const double lp = -0.5 * r + root;
    const double lm = -0.5 * r - root;
    const double ep = lp * std::exp(-t * lp * lp);
    const double em = lm * std::exp(-t * lm * lm);
    const double b11 = (m - 2.0) / r + half_ell;
    const double b22 = -m / r + half_ell;
    const double d1 = (ep * (b11 - lm) + em * (lp - b11)) / (2.0 * root);
    const double d2 = (ep * (b22 - lm) + em * (lp - b22)) / (2.0 * root);
    return {d1, d2};
}

// Even-in-tau part of the digamma factor (the pure-imaginary 1/(i tau) piece
// drops out of the symmetrized principal value). The finite sum is built
// incrementally by the caller; `base` = 2 Re(psi(1+it) - psi(1+2it)) + 2 log 2.
double re_jfactor_base(double tau) {
    const cplx i(0.0, 1.0);
    const cplx d = specfn::digamma(1.0 + i * tau) - specfn::digamma(1.0 + 2.0 * i * tau);
    return 2.0 * d.real() + 2.0 * kLog2;
}

// Sum over even m of Re(jfactor) times the chosen heat pairing.
double jterm_integrand(double t, const SpectralParams& p, double tau,
                       const TruncationPolicy& policy, JWeightMode mode) {
    const double r = p.r;
    const double beta = 1.0 + 1.0 / (r * r);
    const double half_ell = 0.5 * p.ell();
    const int M = principal_m_cutoff(p, t, policy.eps_tail);
    const double base = re_jfactor_base(tau);
    double finite = 0.0;  // 4 sum_{j odd < m} j/(j^2 + 4 tau^2)
    double acc = 0.0;
    for (int m = 0; m <= M; m += 2) {
        if (m >= 2) {
            const double j = m - 1.0;
            finite += 4.0 * j / (j * j + 4.0 * tau * tau);
        }
        const double dm = base - finite;
        double wsum;
        if (mode == JWeightMode::block_trace) {
            wsum = block_heat_trace(t, r, beta, m, tau);
            if (m > 0) wsum += block_heat_trace(t, r, beta, -m, tau);
        } else {
            wsum = block_heat_diag(t, r, beta, half_ell, m, tau).second +
                   block_heat_diag(t, r, beta, half_ell, m + 2, tau).first;
            if (m > 0) {
                wsum += block_heat_diag(t, r, beta, half_ell, -m, tau).second +
                        block_heat_diag(t, r, beta, half_ell, -m + 2, tau).first;
            }
        }
        acc += dm * wsum;
    }
    return acc;
}

}  // namespace

std::pair<double, double> identity_term(double t, const SpectralParams& p,
                                        const SurfaceData& surface,
                                        const quad::QuadratureSpec& qspec,
                                        const TruncationPolicy& policy,
                                        double* cont_err) {
    if (!(t > 0.0)) throw std::invalid_argument("identity_term: t > 0");
    surface.validate();
    const double volfac = 2.0 * surface.genus - 2.0 + surface.kappa;
    const double cutoff = qspec.tau_cutoff(t, policy.eps_tail);
    auto f = [&](double tau) {
        return tau * std::tanh(kPi * tau) * h_principal(t, p, tau, policy);
    };
    const auto qr = quad::integrate(f, 0.0, cutoff, qspec);
    const double cont = volfac * 2.0 * qr.value;
    if (cont_err) *cont_err = std::abs(volfac) * 2.0 * qr.err_estimate;

    double disc = 0.0;
    if (surface.spin.eps_k == 1) {
        long terms = 0;
        for (int n = 2;; n += 2) {
            const double hn = h_discrete(t, p, n, policy);
            disc += 2.0 * (n - 1.0) * hn;
            const double lam = minimal_ktype_eigenvalue(p, n);
            if (std::exp(-t * lam * lam) * n < policy.eps_tail * (1.0 + std::abs(disc))) break;
            if (++terms > policy.max_terms) {
                throw truncation_error("identity_term: discrete sum budget");
            }
        }
        disc *= volfac;
    }
    return {cont, disc};
}

double hyperbolic_term(double t, const SpectralParams& p,
                       const std::vector<HyperbolicClass>& classes,
                       const quad::QuadratureSpec& qspec,
                       const TruncationPolicy& policy, double* err) {
    if (!(t > 0.0)) throw std::invalid_argument("hyperbolic_term: t > 0");
    double acc = 0.0, errs = 0.0;
    const double cutoff = qspec.tau_cutoff(t, policy.eps_tail);
    for (const HyperbolicClass& c : classes) {
        c.validate();
        const double weight =
            c.chi_trace * c.u / (4.0 * kPi * c.index * std::sinh(0.5 * c.u));
        // int cos(u tau) e^{-4 tau^2 t} ... carries e^{-u^2/(16 t)}.
        if (c.u * c.u / (16.0 * t) > std::log(1.0 / policy.eps_tail) + 10.0) {
            errs += std::abs(weight) * policy.eps_tail;
            continue;
        }
        quad::QuadratureSpec qosc = qspec;
        qosc.initial_segments =
            std::max(qspec.initial_segments, static_cast<int>(c.u * cutoff / kPi) + 1);
        auto f = [&](double tau) {
            return std::cos(c.u * tau) * h_principal(t, p, tau, policy);
        };
        const auto qr = quad::integrate(f, 0.0, cutoff, qosc);
        acc += weight * 2.0 * qr.value;
        errs += std::abs(weight) * 2.0 * qr.err_estimate;
    }
    if (err) *err = errs;
    return acc;
}

std::pair<cplx, cplx> jfactor(int m, double tau) {
    if (m % 2 != 0) throw std::invalid_argument("jfactor: m must be even");
    if (tau == 0.0) throw pole_error("jfactor: pole at tau = 0");
    const cplx i(0.0, 1.0);
    const cplx it = i * tau;
    const int am = std::abs(m);
    const cplx formA = specfn::digamma(0.5 + it) + specfn::digamma(it) -
                       specfn::digamma((1.0 + am) / 2.0 + it) -
                       specfn::digamma((1.0 - am) / 2.0 + it);
    cplx formB = 2.0 * (specfn::digamma(1.0 + it) - specfn::digamma(1.0 + 2.0 * it)) -
                 1.0 / it + 2.0 * kLog2;
    for (int j = 1; j <= am - 1; j += 2) {
        formB -= 4.0 * j / (j * j + 4.0 * tau * tau);
    }
    return {formA, formB};
}

CuspTerms cusp_terms(double t, const SpectralParams& p, const SurfaceData& surface,
                     const quad::QuadratureSpec& qspec, const TruncationPolicy& policy) {
    if (!(t > 0.0)) throw std::invalid_argument("cusp_terms: t > 0");
    surface.validate();
    CuspTerms out;
    const int kt = surface.kappa_trivial();
    const int kappa = surface.kappa;
    const double cutoff = qspec.tau_cutoff(t, policy.eps_tail);

    if (kt > 0) {
        const cplx i(0.0, 1.0);
        auto fpsi = [&](double tau) {
            return specfn::digamma(1.0 + 2.0 * i * tau).real() *
                   h_principal(t, p, tau, policy);
        };
        const auto qr = quad::integrate(fpsi, 0.0, cutoff, qspec);
        out.psi_int = -2.0 * kt / (2.0 * kPi) * 2.0 * qr.value;
        out.psi_err = 2.0 * kt / (2.0 * kPi) * 2.0 * qr.err_estimate;

        double disc = 0.0;
        long terms = 0;
        for (int n = 2;; n += 2) {
            const double hn = h_discrete(t, p, n, policy);
            disc += hn;
            const double lam = minimal_ktype_eigenvalue(p, n);
            if (std::exp(-t * lam * lam) < policy.eps_tail * (1.0 + std::abs(disc))) break;
            if (++terms > policy.max_terms) {
                throw truncation_error("cusp_terms: discrete sum budget");
            }
        }
        out.disc_sum = -2.0 * kt * disc;  // -2 kt * (1/2) * sum over +-n
        out.h0 = 0.5 * kt * h_principal(t, p, 0.0, policy);
    }
    if (kappa - kt > 0) {
        auto fh = [&](double tau) { return h_principal(t, p, tau, policy); };
        const auto qr = quad::integrate(fh, 0.0, cutoff, qspec);
        out.log2_int = 2.0 * (kappa - kt) * kLog2 / (2.0 * kPi) * 2.0 * qr.value;
        out.log2_err = 2.0 * (kappa - kt) * kLog2 / (2.0 * kPi) * 2.0 * qr.err_estimate;
    }
    return out;
}

double pv_jterm(double t, const SpectralParams& p, const TruncationPolicy& policy,
                const quad::QuadratureSpec& qspec, JWeightMode mode, double* err) {
    if (!(t > 0.0)) throw std::invalid_argument("pv_jterm: t > 0");
    const double cutoff = qspec.tau_cutoff(t, policy.eps_tail);
    auto f = [&](double tau) { return jterm_integrand(t, p, tau, policy, mode); };
    const auto qr = quad::integrate(f, 0.0, cutoff, qspec);
    if (err) *err = 1.0 / (4.0 * kPi) * 2.0 * qr.err_estimate;
    return -1.0 / (4.0 * kPi) * 2.0 * qr.value;
}

TraceBreakdown geometric_side(double t, const SpectralParams& p,
                              const SurfaceData& surface,
                              const std::vector<HyperbolicClass>& classes,
                              const quad::QuadratureSpec& qspec,
                              const TruncationPolicy& policy, JWeightMode mode) {
    surface.validate();
    if (surface.spin.eps_k != 1) {
        throw std::domain_error("geometric_side: requires fiber-trivial spin (eps_k = +1)");
    }
    TraceBreakdown b;
    const auto [cont, disc] = identity_term(t, p, surface, qspec, policy,
                                            &b.err_identity_cont);
    b.identity_cont = cont;
    b.identity_disc = disc;
    b.hyperbolic = hyperbolic_term(t, p, classes, qspec, policy, &b.err_hyperbolic);
    const CuspTerms cusp = cusp_terms(t, p, surface, qspec, policy);
    b.cusp_psi = cusp.psi_int;
    b.cusp_disc = cusp.disc_sum;
    b.cusp_log2 = cusp.log2_int;
    b.h_zero = cusp.h0;
    b.err_cusp_psi = cusp.psi_err;
    b.err_cusp_log2 = cusp.log2_err;
    const int kt = surface.kappa_trivial();
    b.pv_jterm =
        kt > 0 ? 2.0 * kt * pv_jterm(t, p, policy, qspec, mode, &b.err_pv_jterm) : 0.0;
    b.err_pv_jterm *= 2.0 * kt;
    // fixed accumulation order
    b.total = b.identity_cont;
    b.total += b.identity_disc;
    b.total += b.hyperbolic;
    b.total += b.cusp_psi;
    b.total += b.cusp_disc;
    b.total += b.cusp_log2;
    b.total += b.h_zero;
    b.total += b.pv_jterm;
    b.err_estimate = b.err_identity_cont + b.err_hyperbolic + b.err_cusp_psi +
                     b.err_cusp_log2 + b.err_pv_jterm;
    return b;
}

double tr_principal_part(double t, const SpectralParams& p, const SurfaceData& surface,
                         const std::vector<HyperbolicClass>& classes,
                         const quad::QuadratureSpec& qspec,
                         const TruncationPolicy& policy, JWeightMode mode) {
    surface.validate();
    if (surface.spin.eps_k != 1) {
        throw std::domain_error("tr_principal_part: requires fiber-trivial spin");
    }
    const double volfac = 2.0 * surface.genus - 2.0 + surface.kappa;
    const int kt = surface.kappa_trivial();
    const int kappa = surface.kappa;
    const double cutoff = qspec.tau_cutoff(t, policy.eps_tail);
    const cplx i(0.0, 1.0);

    // One adaptive pass for all smooth even integrands.
    auto f = [&](double tau) {
        const double h = h_principal(t, p, tau, policy);
        double v = volfac * tau * std::tanh(kPi * tau) * h;
        if (kt > 0) {
            v -= 2.0 * kt / (2.0 * kPi) * specfn::digamma(1.0 + 2.0 * i * tau).real() * h;
            v -= 2.0 * kt / (4.0 * kPi) * jterm_integrand(t, p, tau, policy, mode);
        }
        if (kappa - kt > 0) {
            v += 2.0 * (kappa - kt) * kLog2 / (2.0 * kPi) * h;
        }
        return v;
    };
    double total = 2.0 * quad::integrate(f, 0.0, cutoff, qspec).value;
    if (kt > 0) total += 0.5 * kt * h_principal(t, p, 0.0, policy);
    total += hyperbolic_term(t, p, classes, qspec, policy);
    return total;
}

}  // namespace etainv
