#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "etainv/heat.hpp"
#include "etainv/quadrature.hpp"
#include "etainv/selberg.hpp"
#include "etainv/spectrum.hpp"
#include "etainv/surface.hpp"

namespace etainv {

enum class EtaComponent { d1, d2, p, total };

struct EtaResult {
    cplx value = 0.0;
    cplx s = 0.0;
    EtaComponent component = EtaComponent::total;
    bool pole_subtracted = false;
    double residue_r0 = 0.0;  // coefficient of the 1/s pole subtracted at s = 0
    double err_estimate = 0.0;
};

// Index pair of the discrete double family with
// q(k, l) = ((2l-1)^2 (1+r^2) - r^2 (2k-1)^2)^{1/2}, l > k >= 1.
struct QIndex {
    int k = 1;
    int l = 2;
    double q(const SpectralParams& p) const;
};

// Closed form of the first discrete component,
// 2 (2-2g-kappa) r^s (zeta0(s-1, r^2/2) - (r^2/2) zeta0(s, r^2/2))
//   + 2 kappa_t r^s zeta0(s, r^2/2);
// simple poles at s = 1, 2 only. Requires the fiber-trivial spin structure.
EtaResult eta_d1(const SpectralParams& p, const SurfaceData& surface, cplx s);

// Independent heat-kernel/Mellin evaluation of eta_d1 at s = 0: builds the
// minimal-K-type theta sum, subtracts its fitted small-time expansion and
// integrates t^{-1/2} against the remainder.
double eta_d1_mellin_oracle(const SpectralParams& p, const SurfaceData& surface,
                            const quad::QuadratureSpec& qspec,
                            const TruncationPolicy& policy);

// Second discrete component by direct double summation (absolute-convergence
// region Re s > 2.5), with a Hurwitz-zeta-accelerated tail.
EtaResult eta_d2_direct(const SpectralParams& p, const SurfaceData& surface, cplx s,
                        const TruncationPolicy& policy);

// Meromorphic continuation of the same component via binomial reduction of
// q^{-s} to zeta-type single sums; valid away from the poles.
cplx eta_d2_continued(const SpectralParams& p, const SurfaceData& surface, cplx s,
                      const TruncationPolicy& policy);

// Value at s = 0: the continuation collapses to the residues at s = 1 of the
// weighted q-power sums. A Laurent extrapolation near s = 1 is run as a
// diagnostic and must agree with the residues to 1e-6.
EtaResult eta_d2_at_zero(const SpectralParams& p, const SurfaceData& surface,
                         const TruncationPolicy& policy);

// Heat-regularized principal component; see the regularization notes in the
// implementation. residue_r0 reports twice the fitted t^{-1/2} coefficient;
// fit_out (optional) receives the fitted small-time expansion.
EtaResult eta_p_regularized(const SpectralParams& p, const SurfaceData& surface,
                            const std::vector<HyperbolicClass>& classes,
                            const quad::QuadratureSpec& qspec,
                            const TruncationPolicy& policy,
                            JWeightMode mode = JWeightMode::block_trace,
                            AsymptoticFit* fit_out = nullptr);

// eta_d1(0) + eta_d2(0) + eta_p, errors combined in quadrature.
EtaResult eta_total(const SpectralParams& p, const SurfaceData& surface,
                    const std::vector<HyperbolicClass>& classes,
                    const quad::QuadratureSpec& qspec, const TruncationPolicy& policy,
                    JWeightMode mode = JWeightMode::block_trace);

struct SweepRow {
    double r = 0.0;
    double eta_d1 = 0.0;
    double eta_d2 = 0.0;
    double eta_p = 0.0;
    double eta_total = 0.0;
    double err_estimate = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double extrapolated = 0.0;  // Richardson in r^2 on eta_total
    double limit = 0.0;         // (1/6)(2 - 2g - kappa) = -vol/(12 pi)
};

// r_list must be decreasing with all entries <= 0.5. Rows are computed in
// parallel (capped by ETA_NUM_THREADS) and assembled in input order.
SweepResult adiabatic_sweep(const std::vector<double>& r_list, const SurfaceData& surface,
                            const std::vector<HyperbolicClass>& classes,
                            const quad::QuadratureSpec& qspec,
                            const TruncationPolicy& policy,
                            JWeightMode mode = JWeightMode::block_trace);

namespace detail {

// Weighted q-power sum h(w) = sum_{l>k>=1} (2k-1)^{pw} q(k,l)^{-w} (pw = 1 or
// 0), continued by the binomial reduction. Throws pole_error on the pole set.
cplx h_qsum_continued(const SpectralParams& p, cplx w, bool weighted,
                      const TruncationPolicy& policy);

// Residue at w = 1 of the same sum (exact, from the zeta reduction).
double h_qsum_residue_at_1(const SpectralParams& p, bool weighted);

// f_r(s) (weighted) / g_r(s) (weight 1) by direct summation, l-outer with the
// k-sum complete; `accelerated` adds the algebraic-tail Hurwitz correction.
struct DirectSum {
    cplx value;
    double err_estimate;
};
DirectSum fg_direct(const SpectralParams& p, cplx s, bool weighted, long l_max,
                    bool accelerated);

// Regularized Mellin transform at s = 0 of a theta-type sampler:
// (1/sqrt(pi)) [ sum_i c_i I_i + int_tcut^1 t^{-1/2}(theta - model)
//                + int_1^tmax t^{-1/2} theta ],
// with the t^{-1/2} basis coefficient's pole dropped.
double mellin_eta_at_zero(const std::function<double(double)>& theta,
                          const std::vector<FitTerm>& terms, double window_lo,
                          double window_hi, double t_infty,
                          const quad::QuadratureSpec& qspec, double* residue_r0,
                          double* err_estimate, AsymptoticFit* fit_out = nullptr);

}  // namespace detail

}  // namespace etainv
