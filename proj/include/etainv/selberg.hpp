#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "etainv/heat.hpp"
#include "etainv/quadrature.hpp"
#include "etainv/spectrum.hpp"
#include "etainv/surface.hpp"

namespace etainv {

// Pairing convention between the diagonal digamma factor of the intertwining
// operator and the 2x2 heat blocks inside the principal-value term.
//  - block_trace: weight m pairs with the full heat trace of the (m-2, m)
//    block; keeps all small-time coefficients O(r^2) (default).
//  - ktype_diagonal: weight m pairs with the K-type-m diagonal heat entry
//    (slot 2 of block m plus slot 1 of block m+2).
enum class JWeightMode { block_trace, ktype_diagonal };

// Geometric side of the trace identity, term by term, with total accumulated
// in a fixed order (identity -> hyperbolic -> cusp terms -> pv term).
struct TraceBreakdown {
    double identity_cont = 0.0;
    double identity_disc = 0.0;
    double hyperbolic = 0.0;
    double cusp_psi = 0.0;
    double cusp_disc = 0.0;
    double cusp_log2 = 0.0;
    double h_zero = 0.0;
    double pv_jterm = 0.0;
    double total = 0.0;
    // per-term quadrature/tail error budget; err_estimate is their sum
    double err_identity_cont = 0.0;
    double err_hyperbolic = 0.0;
    double err_cusp_psi = 0.0;
    double err_cusp_log2 = 0.0;
    double err_pv_jterm = 0.0;
    double err_estimate = 0.0;
};

// Signed cusp contributions as they enter the total.
struct CuspTerms {
    double psi_int = 0.0;   // -2 kt (1/2pi) int psi(1+2i tau) h dtau
    double disc_sum = 0.0;  // -2 kt (1/2) sum_n h(n)
    double log2_int = 0.0;  // +2 (kappa-kt) (log 2 / 2pi) int h dtau
    double h0 = 0.0;        // +(kt/2) h(0)
    double psi_err = 0.0;
    double log2_err = 0.0;
};

// (vol/2pi) ( int tau tanh(pi tau) h dtau , sum (|n|-1) h(n) ).
std::pair<double, double> identity_term(double t, const SpectralParams& p,
                                        const SurfaceData& surface,
                                        const quad::QuadratureSpec& qspec,
                                        const TruncationPolicy& policy,
                                        double* cont_err = nullptr);

// Sum over classes of tr(chi) u / (4 pi [G_g:Z] sinh(u/2)) int cos(u tau) h dtau.
double hyperbolic_term(double t, const SpectralParams& p,
                       const std::vector<HyperbolicClass>& classes,
                       const quad::QuadratureSpec& qspec,
                       const TruncationPolicy& policy, double* err = nullptr);

// Digamma factor of the intertwining operator in its two algebraic forms:
// formA = psi(1/2+it)+psi(it)-psi((1+m)/2+it)-psi((1-m)/2+it);
// formB = 2(psi(1+it)-psi(1+2it)) - 1/(it) + 2 log 2
//         - 4 sum_{j odd < |m|} j/(j^2+4t^2).
std::pair<cplx, cplx> jfactor(int m, double tau);

CuspTerms cusp_terms(double t, const SpectralParams& p, const SurfaceData& surface,
                     const quad::QuadratureSpec& qspec, const TruncationPolicy& policy);

// Principal-value digamma-weighted term for a single trivial-spin cusp copy:
// -(1/4pi) pv int sum_m jfactor(m,tau) w_m(tau) dtau. The symmetrized
// integrand drops the odd 1/(i tau) part analytically, so the pv is an
// ordinary integral. geometric_side scales this by 2 kappa_t.
double pv_jterm(double t, const SpectralParams& p, const TruncationPolicy& policy,
                const quad::QuadratureSpec& qspec,
                JWeightMode mode = JWeightMode::block_trace, double* err = nullptr);

TraceBreakdown geometric_side(double t, const SpectralParams& p,
                              const SurfaceData& surface,
                              const std::vector<HyperbolicClass>& classes,
                              const quad::QuadratureSpec& qspec,
                              const TruncationPolicy& policy,
                              JWeightMode mode = JWeightMode::block_trace);

// Continuous part of the geometric side (everything except the discrete
// n-sums, which cancel exactly against tr_discrete_part). This is the
// quantity whose small-time expansion drives the eta regularization; it
// shares one adaptive pass over tau for all non-oscillatory integrands.
double tr_principal_part(double t, const SpectralParams& p, const SurfaceData& surface,
                         const std::vector<HyperbolicClass>& classes,
                         const quad::QuadratureSpec& qspec,
                         const TruncationPolicy& policy,
                         JWeightMode mode = JWeightMode::block_trace);

}  // namespace etainv
