#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "etainv/surface.hpp"

using namespace etainv;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

SurfaceData make_surface(int g, int kappa, std::vector<int> eps_h, int eps_k = 1) {
    SurfaceData s;
    s.genus = g;
    s.kappa = kappa;
    s.spin.eps_x.assign(g, 1);
    s.spin.eps_y.assign(g, 1);
    s.spin.eps_h = std::move(eps_h);
    s.spin.eps_k = eps_k;
    return s;
}

std::string key_of(const SpinStructure& s) {
    std::string k;
    for (int v : s.eps_x) k += v > 0 ? '+' : '-';
    k += '|';
    for (int v : s.eps_y) k += v > 0 ? '+' : '-';
    k += '|';
    for (int v : s.eps_h) k += v > 0 ? '+' : '-';
    k += '|';
    k += s.eps_k > 0 ? '+' : '-';
    return k;
}

}  // namespace

TEST_CASE("kappa_trivial counts") {
    CHECK(make_surface(0, 4, {1, -1, 1, -1}).kappa_trivial() == 2);
    CHECK(make_surface(1, 2, {-1, -1}).kappa_trivial() == 0);
    CHECK(make_surface(2, 0, {}).kappa_trivial() == 0);
}

TEST_CASE("volume formula") {
    CHECK(make_surface(2, 0, {}).volume() == doctest::Approx(4.0 * kPi).epsilon(1e-15));
    CHECK(make_surface(0, 3, {1, 1, 1}).volume() == doctest::Approx(2.0 * kPi));
    CHECK(make_surface(1, 1, {1}).volume() == doctest::Approx(2.0 * kPi));
    CHECK_THROWS(make_surface(0, 2, {1, 1}).validate());
    CHECK_THROWS(make_surface(1, 0, {}).validate());
}

TEST_CASE("volume identity with the adiabatic limit constant") {
    // -vol/(12 pi) = (1/6)(2 - 2g - kappa), exactly
    int tested = 0;
    for (int g = 0; g <= 4; ++g) {
        for (int kappa = 0; kappa <= 4; ++kappa) {
            if (2 * g - 2 + kappa <= 0) continue;
            SurfaceData s = make_surface(g, kappa, std::vector<int>(kappa, 1));
            const double lhs = -s.volume() / (12.0 * kPi);
            const double rhs = (2.0 - 2.0 * g - kappa) / 6.0;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
            ++tested;
        }
    }
    CHECK(tested >= 20);
}

TEST_CASE("spin structure counting") {
    CHECK(count_spin_structures(1, 2) == 16);
    CHECK(count_spin_structures(2, 1) == 32);
    CHECK(count_spin_structures(1, 0) == 8);  // fiber sign free when no cusp relation
    CHECK(totally_nontrivial_exists(2));
    CHECK_FALSE(totally_nontrivial_exists(3));
    CHECK(totally_nontrivial_exists(4));
}

TEST_CASE("spin enumeration: counts, uniqueness, constraint") {
    for (int g = 0; g <= 2; ++g) {
        for (int kappa = 0; kappa <= 4; ++kappa) {
            const auto all = enumerate_spin_structures(g, kappa);
            CHECK(static_cast<long>(all.size()) == count_spin_structures(g, kappa));
            std::set<std::string> seen;
            for (const auto& s : all) {
                CHECK_NOTHROW(s.validate(g, kappa));
                int prod = 1;
                for (int v : s.eps_h) prod *= v;
                if (kappa >= 1) CHECK(prod == 1);
                seen.insert(key_of(s));
            }
            CHECK(seen.size() == all.size());
        }
    }
}

TEST_CASE("enumeration examples") {
    const auto a = enumerate_spin_structures(0, 2);
    CHECK(a.size() == 4);
    for (const auto& s : a) {
        CHECK(s.eps_h[0] == s.eps_h[1]);  // (+,+) or (-,-)
    }
    const auto b = enumerate_spin_structures(0, 1);
    for (const auto& s : b) CHECK(s.eps_h[0] == 1);  // forced by the product constraint
}

TEST_CASE("hyperbolic class validation") {
    HyperbolicClass c;
    CHECK_NOTHROW(c.validate());
    c.u = -1.0;
    CHECK_THROWS(c.validate());
    c.u = 2.0;
    c.index = 0;
    CHECK_THROWS(c.validate());
}
