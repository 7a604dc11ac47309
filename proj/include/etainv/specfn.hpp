#pragma once

#include <complex>
#include <vector>

namespace etainv::specfn {

using cplx = std::complex<double>;

// Even-index Bernoulli numbers B_2, B_4, ..., B_{2K}, generated at
// construction from B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2pi)^{2k}.
// Immutable after construction.
class BernoulliTable {
public:
    explicit BernoulliTable(int K = 80);
    double b2k(int k) const;          // B_{2k}, 1 <= k <= size()
    int size() const { return static_cast<int>(values_.size()); }

private:
    std::vector<double> values_;
};

// Shared table (K = 80) used by the routines below.
const BernoulliTable& bernoulli_table();

// B_n for any n >= 0 (B_1 = -1/2; odd n >= 3 give 0).
double bernoulli_number(int n);

// Principal branch of log Gamma. Lanczos (g = 7) on Re z >= 0.5, downward
// recurrence with principal logs elsewhere. z must not be a pole.
cplx log_gamma(cplx z);

// psi(z) = Gamma'(z)/Gamma(z). Reflection to Re z >= 0.5, recurrence shift
// to |z| >= 12, then the Bernoulli asymptotic series.
cplx digamma(cplx z);

// Hurwitz zeta(s, a) for a > 0, continued to all s != 1 by Euler-Maclaurin.
cplx hurwitz_zeta(cplx s, double a);

// zeta_0(s, a) = sum_{k>=1} (2k-1+a)^{-s} = zeta(s,a) - 2^{-s} zeta(s,a/2),
// with the a = 0 case reduced to (1 - 2^{-s}) zeta(s).
cplx zeta0(cplx s, double a);

}  // namespace etainv::specfn
