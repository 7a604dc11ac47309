#include <doctest.h>

#include <cmath>
#include <complex>

#include "etainv/errors.hpp"
#include "etainv/specfn.hpp"

using namespace etainv::specfn;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Series oracle: psi(z) = -gamma + sum_k (1/(k+1) - 1/(k+z)), summed to K
// with an Euler-Maclaurin tail; independent of the production
// recurrence/asymptotic path.
std::complex<double> digamma_series_oracle(std::complex<double> z) {
    std::complex<double> acc = -kEulerGamma;
    const long K = 1000000;
    for (long k = 0; k < K; ++k) {
        acc += 1.0 / static_cast<double>(k + 1) - 1.0 / (z + static_cast<double>(k));
    }
    auto f = [&](double x) { return (z - 1.0) / ((x + 1.0) * (x + z)); };
    auto fp = [&](double x) {
        return -(z - 1.0) * (1.0 / ((x + 1.0) * (x + 1.0) * (x + z)) +
                             1.0 / ((x + 1.0) * (x + z) * (x + z)));
    };
    acc += std::log((static_cast<double>(K) + z) / (K + 1.0)) + 0.5 * f(K) - fp(K) / 12.0;
    return acc;
}

// Direct Dirichlet sum with an integral tail correction, valid for Re s >= 2.
std::complex<double> hurwitz_direct_oracle(std::complex<double> s, double a) {
    std::complex<double> acc = 0.0;
    const long K = 200000;
    for (long k = 0; k < K; ++k) acc += std::exp(-s * std::log(a + k));
    const double x = a + K;
    // Euler-Maclaurin tail: x^{1-s}/(s-1) + x^{-s}/2 + s x^{-s-1}/12
    acc += std::exp((1.0 - s) * std::log(x)) / (s - 1.0) +
           0.5 * std::exp(-s * std::log(x)) +
           s * std::exp(-(s + 1.0) * std::log(x)) / 12.0;
    return acc;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    const BernoulliTable& B = bernoulli_table();
    CHECK(B.size() >= 30);
    CHECK(B.b2k(1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(B.b2k(2) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
    CHECK(B.b2k(3) == doctest::Approx(1.0 / 42.0).epsilon(1e-14));
    CHECK(B.b2k(8) == doctest::Approx(-7.09215686274509804).epsilon(1e-13));
    CHECK(bernoulli_number(1) == -0.5);
    CHECK(bernoulli_number(7) == 0.0);
}

TEST_CASE("log_gamma spot values") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
    CHECK(log_gamma({0.5, 0.0}).real() ==
          doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-13));
    CHECK(log_gamma({5.0, 0.0}).real() == doctest::Approx(std::log(24.0)).epsilon(1e-13));
    // exp(log_gamma) = Gamma to 1e-13 relative on a grid (recurrence oracle
    // Gamma(z+1) = z Gamma(z)).
    for (double x : {0.25, 0.8, 1.6, 3.0, 7.5}) {
        for (double y : {0.0, 0.7, 3.0}) {
            const std::complex<double> z(x, y);
            const auto lhs = std::exp(log_gamma(z + 1.0));
            const auto rhs = z * std::exp(log_gamma(z));
            CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));
        }
    }
    CHECK_THROWS_AS((void)log_gamma({-2.0, 0.0}), etainv::pole_error);
}

TEST_CASE("log_gamma reflection region") {
    // against the recurrence from the positive side
    const std::complex<double> z(-1.3, 0.4);
    const auto direct = std::exp(log_gamma(z));
    const auto shifted = std::exp(log_gamma(z + 3.0)) / (z * (z + 1.0) * (z + 2.0));
    CHECK(std::abs(direct - shifted) <= 1e-12 * std::abs(shifted));
}

TEST_CASE("digamma values and identities") {
    CHECK(digamma({1.0, 0.0}).real() == doctest::Approx(-kEulerGamma).epsilon(1e-13));
    CHECK(std::abs(digamma({2.0, 0.0}) - digamma({1.0, 0.0}) - 1.0) < 1e-12);
    {
        const std::complex<double> z(1.7, 0.0);
        const auto dup = digamma(z) + digamma(z + 0.5) - 2.0 * (digamma(2.0 * z) -
                                                                std::log(2.0));
        CHECK(std::abs(dup) < 1e-12);
    }
    // oracle comparison off the real axis
    for (double x : {0.4, 1.3, 6.0}) {
        for (double y : {0.3, 2.0}) {
            const std::complex<double> z(x, y);
            CHECK(std::abs(digamma(z) - digamma_series_oracle(z)) < 2e-12);
        }
    }
    CHECK_THROWS_AS((void)digamma({0.0, 0.0}), etainv::pole_error);
}

TEST_CASE("digamma recurrence and duplication on a complex grid") {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const std::complex<double> z(0.2 + 0.45 * i, -2.0 + 0.45 * j);
            if (std::abs(z) < 0.05) continue;
            worst = std::max(worst, std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z));
            worst = std::max(worst, std::abs(digamma(z) + digamma(z + 0.5) -
                                             2.0 * (digamma(2.0 * z) - std::log(2.0))));
        }
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("digamma asymptotic form for large real x") {
    const BernoulliTable& B = bernoulli_table();
    for (double x : {20.0, 35.0, 80.0}) {
        double expect = std::log(x) - 1.0 / (2.0 * x);
        for (int k = 1; k <= 5; ++k) {
            expect -= B.b2k(k) / (2.0 * k * std::pow(x, 2.0 * k));
        }
        CHECK(std::abs(digamma({x, 0.0}).real() - expect) <= 1e-12);
    }
}

TEST_CASE("hurwitz zeta closed forms and oracle") {
    for (double a : {0.005, 0.125, 0.5, 1.0, 2.5}) {
        CHECK(std::abs(hurwitz_zeta(0.0, a) - (0.5 - a)) < 1e-12);
        CHECK(std::abs(hurwitz_zeta(-1.0, a) + 0.5 * (a * a - a + 1.0 / 6.0)) < 1e-12);
    }
    CHECK(hurwitz_zeta(2.0, 1.0).real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    for (double a : {0.25, 1.0, 3.0}) {
        for (auto s : {std::complex<double>(2.0, 0.0), {3.5, 1.0}, {2.2, -2.0}}) {
            const auto ref = hurwitz_direct_oracle(s, a);
            CHECK(std::abs(hurwitz_zeta(s, a) - ref) <= 1e-12 * (1.0 + std::abs(ref)));
        }
    }
    CHECK_THROWS_AS((void)hurwitz_zeta({1.0, 0.0}, 1.0), etainv::pole_error);
    CHECK_THROWS_AS((void)hurwitz_zeta({2.0, 0.0}, -1.0), etainv::pole_error);
}

TEST_CASE("hurwitz zeta reflection/recurrence in a") {
    for (auto s : {std::complex<double>(-2.0, 0.0), {-0.5, 0.0}, {0.3, 2.0}, {3.0, 0.0}}) {
        for (double a : {0.25, 1.0, 2.5}) {
            const auto lhs = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0);
            const auto rhs = std::exp(-s * std::log(a));
            CHECK(std::abs(lhs - rhs) < 1e-11 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("hurwitz zeta residue at s=1") {
    // (s-1) zeta(s,a) -> 1 along a shrinking sequence
    for (double a : {0.25, 1.0, 2.5}) {
        double prev = 0.0, extrap = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double eps = 1e-5 / (i + 1.0);
            const double v = (hurwitz_zeta({1.0 + eps, 0.0}, a) * eps).real();
            if (i == 0) prev = v;
            else extrap = 2.0 * v - prev;
        }
        CHECK(std::abs(extrap - 1.0) < 1e-8);
    }
}

TEST_CASE("zeta0 values") {
    CHECK(std::abs(zeta0(0.0, 0.5) - (-0.25)) < 1e-13);
    CHECK(std::abs(zeta0(-1.0, 0.0) - (1.0 / 12.0)) < 1e-13);
    CHECK(zeta0(2.0, 0.0).real() == doctest::Approx(kPi * kPi / 8.0).epsilon(1e-13));
    // direct odd-index summation oracle at Re s >= 2
    for (double a : {0.0, 0.02, 0.8}) {
        std::complex<double> acc = 0.0;
        const std::complex<double> s(2.5, 0.5);
        for (long k = 1; k <= 400000; ++k) acc += std::exp(-s * std::log(2.0 * k - 1.0 + a));
        // tail by Euler-Maclaurin on odd integers: (1/2) x^{1-s}/(s-1) + x^{-s}/2
        const double x = 2.0 * 400000 + 1.0 + a;
        acc += 0.5 * std::exp((1.0 - s) * std::log(x)) / (s - 1.0) +
               0.5 * std::exp(-s * std::log(x));
        CHECK(std::abs(zeta0(s, a) - acc) < 1e-10 * (1.0 + std::abs(acc)));
    }
}
