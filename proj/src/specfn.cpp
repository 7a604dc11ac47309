#include "etainv/specfn.hpp"

#include <cmath>
#include <limits>

#include "etainv/errors.hpp"

namespace etainv::specfn {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// zeta(2k) by direct summation; exact closed forms for 2k <= 8 where the
// direct sum would need too many terms.
double even_zeta(int twok) {
    switch (twok) {
        case 2: return kPi * kPi / 6.0;
        case 4: return std::pow(kPi, 4) / 90.0;
        case 6: return std::pow(kPi, 6) / 945.0;
        case 8: return std::pow(kPi, 8) / 9450.0;
        default: break;
    }
    double s = 0.0;
    for (int n = 1;; ++n) {
        double t = std::pow(static_cast<double>(n), -twok);
        s += t;
        if (t < 1e-20 * s) break;
    }
    return s;
}

}  // namespace

BernoulliTable::BernoulliTable(int K) {
    values_.reserve(K);
    double fact = 1.0;  // (2k)!
    for (int k = 1; k <= K; ++k) {
        fact *= (2.0 * k - 1.0) * (2.0 * k);
        double sign = (k % 2 == 1) ? 1.0 : -1.0;
        values_.push_back(sign * 2.0 * fact * even_zeta(2 * k) /
                          std::pow(2.0 * kPi, 2.0 * k));
    }
}

double BernoulliTable::b2k(int k) const {
    return values_.at(static_cast<size_t>(k) - 1);
}

const BernoulliTable& bernoulli_table() {
    static const BernoulliTable table(80);
    return table;
}

double bernoulli_number(int n) {
    if (n == 0) return 1.0;
    if (n == 1) return -0.5;
    if (n % 2 == 1) return 0.0;
    return bernoulli_table().b2k(n / 2);
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) {
        throw pole_error("log_gamma: pole at non-positive integer");
    }
    // Lanczos, g = 7, 9 coefficients (Godfrey); ~1e-15 relative on Re z >= 0.5.
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (z.real() >= 0.5) {
        cplx w = z - 1.0;
        cplx acc = c[0];
        for (int i = 1; i < 9; ++i) acc += c[i] / (w + static_cast<double>(i));
        cplx t = w + 7.5;
        return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t + std::log(acc);
    }
    // log Gamma(z) = log Gamma(z+n) - sum log(z+k); exact on the cut plane
    // C \ (-inf, 0] with principal logs. Real negative arguments pick up the
    // sign of Gamma through the individual log terms.
    int n = static_cast<int>(std::ceil(0.5 - z.real()));
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) acc += std::log(z + static_cast<double>(k));
    return log_gamma(z + static_cast<double>(n)) - acc;
}

cplx digamma(cplx z) {
    if (is_nonpositive_integer(z)) {
        throw pole_error("digamma: pole at non-positive integer");
    }
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - kPi / std::tan(kPi * z);
    }
    cplx shift = 0.0;
    while (std::abs(z) < 12.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv2 = 1.0 / (z * z);
    cplx acc = std::log(z) - 0.5 / z;
    cplx p = inv2;
    const BernoulliTable& B = bernoulli_table();
    for (int k = 1; k <= 12; ++k) {
        acc -= B.b2k(k) / (2.0 * k) * p;
        p *= inv2;
    }
    return acc + shift;
}

namespace {

// B_n(a) by the binomial sum; adequate for the n <= 40 used here.
double bernoulli_poly(int n, double a) {
    // B_n(a) = sum_k C(n,k) B_k a^{n-k}
    double acc = 0.0;
    double binom = 1.0;  // C(n, k)
    for (int k = 0; k <= n; ++k) {
        acc += binom * bernoulli_number(k) * std::pow(a, n - k);
        binom *= static_cast<double>(n - k) / (k + 1.0);
    }
    return acc;
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a) {
    if (a <= 0.0) {
        throw pole_error("hurwitz_zeta: requires a > 0");
    }
    if (s == cplx(1.0, 0.0)) {
        throw pole_error("hurwitz_zeta: pole at s = 1");
    }
    // zeta(-n, a) = -B_{n+1}(a)/(n+1), exact at nonpositive integers
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() >= -39.0 &&
        s.real() == std::floor(s.real())) {
        const int n = static_cast<int>(-s.real());
        return -bernoulli_poly(n + 1, a) / (n + 1.0);
    }
    // Euler-Maclaurin: shift the index until a+N is comfortably larger than
    // |s|, then tail integral + B_{2j} corrections (j <= 12).
    const double target = std::max(16.0, 1.25 * std::abs(s));
    int N = 0;
    cplx head = 0.0;
    while (a + N < target) {
        head += std::exp(-s * std::log(a + N));
        ++N;
    }
    const double x = a + N;
    const double lx = std::log(x);
    const cplx xms = std::exp(-s * lx);  // x^{-s}
    cplx acc = head + xms * x / (s - 1.0) + 0.5 * xms;
    // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
    const BernoulliTable& B = bernoulli_table();
    cplx rising = s;           // (s)_{2j-1}
    cplx xpow = xms / x;       // x^{-s-2j+1}
    double fact = 2.0;         // (2j)!
    for (int j = 1; j <= 12; ++j) {
        acc += B.b2k(j) / fact * rising * xpow;
        rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        xpow /= x * x;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return acc;
}

cplx zeta0(cplx s, double a) {
    if (s == cplx(1.0, 0.0)) {
        throw pole_error("zeta0: pole at s = 1");
    }
    if (a < 0.0) {
        throw pole_error("zeta0: requires a >= 0");
    }
    const cplx two_ms = std::exp(-s * std::log(2.0));
    if (a == 0.0) {
        return (1.0 - two_ms) * hurwitz_zeta(s, 1.0);
    }
    return hurwitz_zeta(s, a) - two_ms * hurwitz_zeta(s, a / 2.0);
}

}  // namespace etainv::specfn
