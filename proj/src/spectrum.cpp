#include "etainv/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace etainv {

SpectralParams::SpectralParams(double r_) : r(r_) {
    if (!(r > 0.0)) throw std::invalid_argument("SpectralParams: r must be > 0");
}

Mat2c principal_block(const SpectralParams& p, int m, double tau) {
    const double r = p.r;
    const double half_ell = 0.5 * p.ell();
    const cplx i(0.0, 1.0);
    Mat2c B;
    B[0][0] = (m - 2.0) / r + half_ell;
    B[0][1] = -i * (cplx(m - 1.0, 0.0) - 2.0 * i * tau);
    B[1][0] = i * (cplx(m - 1.0, 0.0) + 2.0 * i * tau);
    B[1][1] = -m / r + half_ell;
    return B;
}

EigenPair principal_eigenvalues(const SpectralParams& p, int m, double tau) {
    const double r = p.r;
    const double rad = (m - 1.0) * (m - 1.0) * (1.0 + 1.0 / (r * r)) + 4.0 * tau * tau;
    const double root = std::sqrt(rad);
    EigenPair e;
    e.lambda_plus = -0.5 * r + root;
    e.lambda_minus = -0.5 * r - root;
    e.m = m;
    e.discrete = false;
    e.tau = tau;
    return e;
}

Mat2d discrete_block(const SpectralParams& p, int n, int m) {
    if (m <= n) throw std::domain_error("discrete_block: requires m >= n + 2");
    const double r = p.r;
    const double half_ell = 0.5 * p.ell();
    Mat2d B;
    B[0][0] = (m - 2.0) / r + half_ell;
    B[0][1] = n - static_cast<double>(m);
    B[1][0] = -(n + m - 2.0);
    B[1][1] = -m / r + half_ell;
    return B;
}

EigenPair discrete_eigenvalues(const SpectralParams& p, int n, int m) {
    if (m <= n) throw std::domain_error("discrete_eigenvalues: requires m >= n + 2");
    const double r = p.r;
    const double rad =
        (m - 1.0) * (m - 1.0) * (1.0 + 1.0 / (r * r)) - (n - 1.0) * (n - 1.0);
    // m - 1 >= n + 1 > n - 1, so the radicand is strictly positive.
    const double root = std::sqrt(rad);
    EigenPair e;
    e.lambda_plus = -0.5 * r + root;
    e.lambda_minus = -0.5 * r - root;
    e.m = m;
    e.discrete = true;
    e.n = n;
    return e;
}

double minimal_ktype_eigenvalue(const SpectralParams& p, int n) {
    return -0.5 * p.r + (1.0 - n) / p.r;
}

std::vector<Band> continuous_bands(const SpectralParams& p, const SurfaceData& surface,
                                   int max_index) {
    if (max_index < 1) throw std::invalid_argument("continuous_bands: max_index >= 1");
    surface.validate();
    std::vector<Band> bands;
    const int kt = surface.kappa_trivial();
    if (kt == 0) return bands;  // no continuous spectrum
    const double r = p.r;
    const double slope = std::sqrt(1.0 + 1.0 / (r * r));
    const int start = surface.spin.eps_k == 1 ? 1 : 0;
    for (int m = start; m <= max_index; m += 2) {
        Band b;
        b.m = m;
        b.gap_low = -0.5 * r - m * slope;
        b.gap_high = -0.5 * r + m * slope;
        b.multiplicity = kt;
        bands.push_back(b);
    }
    return bands;
}

Mat2c bnormal_matrix(const SpectralParams& p, int m, double s) {
    const double r = p.r;
    const cplx i(0.0, 1.0);
    Mat2c N;
    N[0][0] = -2.0 * s - 0.5 * r;
    N[0][1] = -i * static_cast<double>(m) * (1.0 + 1.0 / (r * r));
    N[1][0] = i * static_cast<double>(m);
    N[1][1] = 2.0 * s - 0.5 * r;
    return N;
}

std::pair<double, double> gap_from_bnormal(const SpectralParams& p, int m) {
    // det(N - lambda) = (lambda + r/2)^2 - 4 s^2 - m^2 (1 + r^-2); a real root
    // in s exists iff |lambda + r/2| >= |m| sqrt(1 + r^-2).
    const double r = p.r;
    const double half_width = std::abs(m) * std::sqrt(1.0 + r * r) / r;
    return {-0.5 * r - half_width, -0.5 * r + half_width};
}

}  // namespace etainv
