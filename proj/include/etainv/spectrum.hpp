#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "etainv/surface.hpp"

namespace etainv {

using cplx = std::complex<double>;
using Mat2c = std::array<std::array<cplx, 2>, 2>;
using Mat2d = std::array<std::array<double, 2>, 2>;

// Fiber radius r and the derived constant ell = (2 - r^2)/r.
struct SpectralParams {
    double r = 1.0;

    explicit SpectralParams(double r_);
    double ell() const { return (2.0 - r * r) / r; }
};

struct EigenPair {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    int m = 0;       // K-type weight of the block
    bool discrete = false;
    double tau = 0.0;  // principal-series parameter (if !discrete)
    int n = 0;         // discrete-series index (if discrete)
};

// Continuous-spectrum band: complement of (gap_low, gap_high), with
// multiplicity kappa_t. The index m follows the band theorem's convention
// (odd for fiber-trivial spin, even otherwise); the 2x2 block formulas below
// use the shifted index m' with m'-1 = +-m.
struct Band {
    int m = 0;
    double gap_low = 0.0;
    double gap_high = 0.0;
    int multiplicity = 0;
};

// 2x2 block of the Dirac operator on the weight-(m-2, m) pair of a principal
// series with parameter tau; self-adjoint for real tau.
Mat2c principal_block(const SpectralParams& p, int m, double tau);

// lambda_pm(tau, m) = -r/2 +- ((m-1)^2 (1 + r^-2) + 4 tau^2)^{1/2}.
EigenPair principal_eigenvalues(const SpectralParams& p, int m, double tau);

// Discrete-series block for weights (m-2, m), m in {n+2, n+4, ...}.
Mat2d discrete_block(const SpectralParams& p, int n, int m);

// lambda_pm(n, m) = -r/2 +- ((m-1)^2 (1 + r^-2) - (n-1)^2)^{1/2}.
EigenPair discrete_eigenvalues(const SpectralParams& p, int n, int m);

// Minimal K-type eigenvalue lambda(n) = -r/2 + (1-n)/r; the anti-holomorphic
// partner carries the same value.
double minimal_ktype_eigenvalue(const SpectralParams& p, int n);

// Bands for |m| <= max_index with parity set by the fiber spin sign; empty
// when kappa_t = 0 (pure point spectrum).
std::vector<Band> continuous_bands(const SpectralParams& p, const SurfaceData& surface,
                                   int max_index);

// Indicial family N(A_{r,m})(s) - r/2 of the cusp-degenerate operator.
Mat2c bnormal_matrix(const SpectralParams& p, int m, double s);

// Open interval of lambda for which det(N - lambda) != 0 for all real s;
// equals the band-theorem gap for the same index.
std::pair<double, double> gap_from_bnormal(const SpectralParams& p, int m);

}  // namespace etainv
