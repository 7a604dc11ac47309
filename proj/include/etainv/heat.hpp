#pragma once

#include <utility>
#include <vector>

#include "etainv/spectrum.hpp"
#include "etainv/surface.hpp"

namespace etainv {

// Tail controls for the K-type sums: truncate once the Gaussian factor
// e^{-(m-1)^2 (1+r^-2) t} drops below eps_tail.
struct TruncationPolicy {
    double eps_tail = 1e-16;
    long max_terms = 1000000;
};

struct FitTerm {
    double power = 0.0;
    bool has_log = false;
};

// Least-squares fit of heat-trace samples against a power/log template.
struct AsymptoticFit {
    std::vector<FitTerm> exponents;
    std::vector<double> coefficients;
    double residual = 0.0;      // max |data - model| over the samples
    double rel_residual = 0.0;  // max |data - model| / |data|
    double cond = 0.0;          // condition estimate of the scaled LS matrix
    bool ill_conditioned = false;

    double eval(double t) const;
    // Coefficient of t^power (log t)^{has_log}; 0 if the term is absent.
    double coefficient(double power, bool has_log) const;
};

// Smallest even cutoff M with e^{-(M-1)^2 (1+r^-2) t} < eps.
int principal_m_cutoff(const SpectralParams& p, double t, double eps);

// h_{t,r}(tau): sum over even m of lambda_+ e^{-t lambda_+^2} + lambda_-
// e^{-t lambda_-^2} for the principal blocks.
double h_principal(double t, const SpectralParams& p, double tau,
                   const TruncationPolicy& policy);

// Same transform through the exponential-series rewriting
// exp(-r^2 t/4 - 4 tau^2 t) sum_m e^{-(m-1)^2(1+r^-2)t} sum_k c_k I^{2k},
// c_k = -r (rt)^{2k}/(2k)! + 2 (rt)^{2k-1}/(2k-1)! (second piece absent at
// k = 0), truncated at series depth K. Intended regime: t, r in (0, 1].
double h_principal_series_form(double t, const SpectralParams& p, double tau,
                               const TruncationPolicy& policy, int K);
bool series_form_in_regime(double t, const SpectralParams& p);

// Pointwise bound 2r exp(...) sum_m e^{...} (1 + I^2 + e^{I^2 r t}) valid for
// t in [0,1], r in (0,1].
double h_principal_series_bound(double t, const SpectralParams& p, double tau,
                                const TruncationPolicy& policy);

// h_{t,r}(n) for a discrete series pi_n, n >= 2 even; h(n) = h(-n).
double h_discrete(double t, const SpectralParams& p, int n,
                  const TruncationPolicy& policy);

enum class PoissonSide { lhs, rhs };

// Theta-type sum sum_{m in 2Z} (m-1)^{2p} (1+r^-2)^p e^{-(m-1)^2 (1+r^-2) t}
// (lhs) and its Poisson-dual form with the t-derivatives of the Gaussian
// terms expanded in closed form (rhs).
double poisson_theta(int p, double t, const SpectralParams& params, PoissonSide side,
                     const TruncationPolicy& policy);

// Discrete part of the regularized heat trace:
// (vol/2pi) sum (|n|-1) h(n) - kappa_t sum h(n), n over +-2N folded by
// h(n) = h(-n). Requires the fiber-trivial spin structure.
double tr_discrete_part(double t, const SpectralParams& p, const SurfaceData& surface,
                        const TruncationPolicy& policy);

// Weighted least squares in the given template basis; powers are normalized
// by the geometric mean of the sample times to tame conditioning.
AsymptoticFit fit_small_time(const std::vector<std::pair<double, double>>& samples,
                             const std::vector<FitTerm>& terms,
                             double weight_power = 1.5);

}  // namespace etainv
