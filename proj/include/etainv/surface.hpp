#pragma once

#include <vector>

namespace etainv {

// Z_2-representation of pi_1 on the standard generators: signs on x_i, y_i
// (handles), h_j (cusp loops) and k (fiber). The cusp relation forces
// prod_j eps_h[j] = +1; commutators contribute nothing.
struct SpinStructure {
    std::vector<int> eps_x;
    std::vector<int> eps_y;
    std::vector<int> eps_h;
    int eps_k = +1;

    void validate(int genus, int kappa) const;
};

// Base orbifold datum: genus, cusp count, spin structure.
struct SurfaceData {
    int genus = 0;
    int kappa = 0;
    SpinStructure spin;

    void validate() const;

    // Number of cusps with trivial spin structure (eps_h = +1).
    int kappa_trivial() const;

    // vol(Gamma\G) = 2 pi (2g - 2 + kappa); the base Poincare volume is the
    // same number under the normalization vol(K/Z) = 1.
    double volume() const;
    double base_volume() const { return volume(); }
};

// Hyperbolic conjugacy-class datum supplied by the user: translation length
// u > 0, character trace tr chi(gamma), centralizer index [Gamma_gamma : Z].
struct HyperbolicClass {
    double u = 1.0;
    double chi_trace = 2.0;
    int index = 1;

    void validate() const;
};

// Number of spin structures: 2^{2g+kappa} for kappa >= 1; for kappa = 0 the
// fiber sign is unconstrained and the count is 2^{2g+1}.
long count_spin_structures(int g, int kappa);

// Totally nontrivial spin structures (all eps_h = -1) exist iff kappa even.
bool totally_nontrivial_exists(int kappa);

// All spin structures for (g, kappa): eps_x, eps_y, eps_k free; eps_h has
// kappa-1 free signs with the last fixed by the product constraint.
std::vector<SpinStructure> enumerate_spin_structures(int g, int kappa);

}  // namespace etainv
