#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "etainv/spectrum.hpp"

using namespace etainv;

namespace {

// Independent 2x2 self-adjoint eigensolver: roots of the characteristic
// polynomial via trace/determinant (the production code never forms these).
std::pair<double, double> eig2_selfadjoint(const Mat2c& B) {
    const double tr = (B[0][0] + B[1][1]).real();
    const cplx detc = B[0][0] * B[1][1] - B[0][1] * B[1][0];
    const double det = detc.real();
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    return {tr / 2.0 + disc, tr / 2.0 - disc};
}

std::pair<double, double> eig2_real(const Mat2d& B) {
    const double tr = B[0][0] + B[1][1];
    const double det = B[0][0] * B[1][1] - B[0][1] * B[1][0];
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    return {tr / 2.0 + disc, tr / 2.0 - disc};
}

SurfaceData trivial_fiber_surface(int g, int kappa, std::vector<int> eps_h) {
    SurfaceData s;
    s.genus = g;
    s.kappa = kappa;
    s.spin.eps_x.assign(g, 1);
    s.spin.eps_y.assign(g, 1);
    s.spin.eps_h = std::move(eps_h);
    s.spin.eps_k = 1;
    return s;
}

}  // namespace

TEST_CASE("principal block spot value") {
    SpectralParams p(1.0);
    const Mat2c B = principal_block(p, 2, 0.0);
    CHECK(B[0][0] == cplx(0.5, 0.0));
    CHECK(B[0][1] == cplx(0.0, -1.0));
    CHECK(B[1][0] == cplx(0.0, 1.0));
    CHECK(B[1][1] == cplx(-1.5, 0.0));
    // self-adjoint for real tau
    const Mat2c C = principal_block(p, 4, 1.3);
    CHECK(C[0][1] == std::conj(C[1][0]));
}

TEST_CASE("principal eigenvalues match the block (oracle)") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> rdist(0.05, 2.0), tdist(0.0, 10.0);
    std::uniform_int_distribution<int> mdist(-10, 10);
    for (int i = 0; i < 500; ++i) {
        const SpectralParams p(rdist(rng));
        const int m = 2 * mdist(rng);
        const double tau = tdist(rng);
        const auto e = principal_eigenvalues(p, m, tau);
        const auto [hi, lo] = eig2_selfadjoint(principal_block(p, m, tau));
        CHECK(std::abs(e.lambda_plus - hi) < 1e-10 * (1.0 + std::abs(hi)));
        CHECK(std::abs(e.lambda_minus - lo) < 1e-10 * (1.0 + std::abs(lo)));
        // trace = -r, product from the quadratic
        CHECK(e.lambda_plus + e.lambda_minus == doctest::Approx(-p.r).epsilon(1e-12));
        const double prod = p.r * p.r / 4.0 - (m - 1.0) * (m - 1.0) / (p.r * p.r) -
                            (m - 1.0) * (m - 1.0) - 4.0 * tau * tau;
        CHECK(e.lambda_plus * e.lambda_minus ==
              doctest::Approx(prod).epsilon(1e-10));
    }
}

TEST_CASE("principal eigenvalue examples") {
    SpectralParams p(1.0);
    const auto e = principal_eigenvalues(p, 2, 0.0);
    CHECK(e.lambda_plus == doctest::Approx(-0.5 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(e.lambda_minus == doctest::Approx(-0.5 - std::sqrt(2.0)).epsilon(1e-14));
    const auto f = principal_eigenvalues(p, 0, 1.0);
    CHECK(f.lambda_plus == doctest::Approx(-0.5 + std::sqrt(6.0)).epsilon(1e-14));
    // lambda_+ minimized over tau at tau = 0
    const double at0 = principal_eigenvalues(p, 4, 0.0).lambda_plus;
    for (double tau : {0.1, 0.5, 2.0}) {
        CHECK(principal_eigenvalues(p, 4, tau).lambda_plus > at0);
    }
    CHECK(at0 == doctest::Approx(-0.5 + 3.0 * std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("discrete block and eigenvalues") {
    SpectralParams p(1.0);
    const Mat2d B = discrete_block(p, 2, 4);
    CHECK(B[0][0] == doctest::Approx(2.5));
    CHECK(B[0][1] == doctest::Approx(-2.0));
    CHECK(B[1][0] == doctest::Approx(-4.0));
    CHECK(B[1][1] == doctest::Approx(-3.5));
    const auto e = discrete_eigenvalues(p, 2, 4);
    CHECK(e.lambda_plus == doctest::Approx(-0.5 + std::sqrt(17.0)).epsilon(1e-14));
    CHECK(e.lambda_minus == doctest::Approx(-0.5 - std::sqrt(17.0)).epsilon(1e-14));
    const auto [hi, lo] = eig2_real(B);
    CHECK(e.lambda_plus == doctest::Approx(hi).epsilon(1e-12));
    CHECK(e.lambda_minus == doctest::Approx(lo).epsilon(1e-12));

    const SpectralParams ph(0.5);
    const auto eh = discrete_eigenvalues(ph, 2, 4);
    CHECK(eh.lambda_plus == doctest::Approx(-0.25 + std::sqrt(44.0)).epsilon(1e-14));

    CHECK_THROWS_AS((void)discrete_eigenvalues(p, 4, 4), std::domain_error);
    CHECK_THROWS_AS((void)discrete_block(p, 4, 2), std::domain_error);
}

TEST_CASE("discrete 500-sample oracle and radicand positivity") {
    std::mt19937 rng(999);
    std::uniform_real_distribution<double> rdist(0.05, 2.0);
    std::uniform_int_distribution<int> ndist(1, 10), kdist(1, 20);
    for (int i = 0; i < 500; ++i) {
        const SpectralParams p(rdist(rng));
        const int n = 2 * ndist(rng);
        const int m = n + 2 * kdist(rng);
        const auto e = discrete_eigenvalues(p, n, m);
        const auto [hi, lo] = eig2_real(discrete_block(p, n, m));
        CHECK(std::abs(e.lambda_plus - hi) < 1e-10 * (1.0 + std::abs(hi)));
        CHECK(std::abs(e.lambda_minus - lo) < 1e-10 * (1.0 + std::abs(lo)));
    }
    for (double r : {0.05, 0.5, 2.0}) {
        for (int n = 2; n <= 20; n += 2) {
            for (int m = n + 2; m <= n + 40; m += 2) {
                const double rad = (m - 1.0) * (m - 1.0) * (1.0 + 1.0 / (r * r)) -
                                   (n - 1.0) * (n - 1.0);
                CHECK(rad > 0.0);
            }
        }
    }
}

TEST_CASE("minimal K-type eigenvalue") {
    CHECK(minimal_ktype_eigenvalue(SpectralParams(1.0), 2) == doctest::Approx(-1.5));
    CHECK(minimal_ktype_eigenvalue(SpectralParams(0.5), 2) == doctest::Approx(-2.25));
    // r -> 0: lambda(2) * r -> -1
    CHECK(minimal_ktype_eigenvalue(SpectralParams(1e-4), 2) * 1e-4 ==
          doctest::Approx(-1.0).epsilon(1e-7));
}

TEST_CASE("continuous bands: parity and multiplicity") {
    SpectralParams p(1.0);
    auto surf = trivial_fiber_surface(0, 4, {1, -1, 1, -1});  // kt = 2
    const auto bands = continuous_bands(p, surf, 5);
    REQUIRE(bands.size() == 3);  // m = 1, 3, 5
    CHECK(bands[0].m == 1);
    CHECK(bands[0].gap_low == doctest::Approx(-0.5 - std::sqrt(2.0)).epsilon(1e-14));
    CHECK(bands[0].gap_high == doctest::Approx(-0.5 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(bands[0].multiplicity == 2);

    // nontrivial fiber spin: even indices including the gapless m = 0 band
    auto surf2 = trivial_fiber_surface(0, 4, {1, -1, 1, -1});
    surf2.spin.eps_k = -1;
    const auto bands2 = continuous_bands(p, surf2, 5);
    REQUIRE(bands2.size() == 3);  // m = 0, 2, 4
    CHECK(bands2[0].m == 0);
    CHECK(bands2[0].gap_low == bands2[0].gap_high);

    // kappa_t = 0: pure point spectrum
    auto surf3 = trivial_fiber_surface(1, 2, {-1, -1});
    CHECK(continuous_bands(p, surf3, 5).empty());
}

TEST_CASE("b-normal gap equals band gap") {
    for (double r : {0.05, 0.3, 1.0, 2.0}) {
        SpectralParams p(r);
        for (int m = -8; m <= 8; ++m) {
            const auto [lo, hi] = gap_from_bnormal(p, m);
            const double slope = std::sqrt(1.0 + 1.0 / (r * r));
            CHECK(std::abs(lo - (-0.5 * r - std::abs(m) * slope)) < 1e-12);
            CHECK(std::abs(hi - (-0.5 * r + std::abs(m) * slope)) < 1e-12);
        }
        // m = 0: empty gap at -r/2
        const auto [l0, h0] = gap_from_bnormal(p, 0);
        CHECK(l0 == doctest::Approx(-0.5 * r));
        CHECK(h0 == doctest::Approx(-0.5 * r));
    }
}

TEST_CASE("b-normal determinant scan at the gap edge") {
    SpectralParams p(1.0);
    auto det_at = [&](double lambda, double s) {
        const Mat2c N = bnormal_matrix(p, 1, s);
        const cplx d = (N[0][0] - lambda) * (N[1][1] - lambda) - N[0][1] * N[1][0];
        return d;
    };
    // inside the gap: no real root in s
    for (double s = -30.0; s <= 30.0; s += 0.01) {
        CHECK(std::abs(det_at(-0.5, s)) > 0.5);
    }
    // at the upper edge the determinant vanishes at s = 0
    const double edge = -0.5 + std::sqrt(2.0);
    CHECK(std::abs(det_at(edge, 0.0)) < 1e-12);
}

TEST_CASE("band edge consistency with the eigenvalue family") {
    // inf over tau of lambda_+(tau, m) is attained at tau = 0 and equals the
    // band upper edge for the index |m-1|
    for (double r : {0.3, 1.0}) {
        SpectralParams p(r);
        SurfaceData surf;
        surf.genus = 0;
        surf.kappa = 4;
        surf.spin.eps_h = {1, 1, -1, -1};
        surf.spin.eps_k = 1;
        const auto bands = continuous_bands(p, surf, 9);
        for (int m : {0, 2, 4, 6}) {
            double inf = 1e300;
            for (int i = 0; i <= 1000; ++i) {
                const double tau = 100.0 * i / 1000.0;
                inf = std::min(inf, principal_eigenvalues(p, m, tau).lambda_plus);
            }
            const int band_index = std::abs(m - 1);
            for (const auto& b : bands) {
                if (b.m != band_index) continue;
                CHECK(inf >= b.gap_high - 1e-12);
                CHECK(principal_eigenvalues(p, m, 0.0).lambda_plus ==
                      doctest::Approx(b.gap_high).epsilon(1e-14));
            }
        }
    }
}
