#include "etainv/surface.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace etainv {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

void check_signs(const std::vector<int>& v, const char* name) {
    for (int s : v) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument(std::string("spin signs in ") + name +
                                        " must be +1 or -1");
        }
    }
}
}  // namespace

void SpinStructure::validate(int genus, int kappa) const {
    if (static_cast<int>(eps_x.size()) != genus ||
        static_cast<int>(eps_y.size()) != genus) {
        throw std::invalid_argument("spin: eps_x/eps_y must have length genus");
    }
    if (static_cast<int>(eps_h.size()) != kappa) {
        throw std::invalid_argument("spin: eps_h must have length kappa");
    }
    check_signs(eps_x, "eps_x");
    check_signs(eps_y, "eps_y");
    check_signs(eps_h, "eps_h");
    if (eps_k != 1 && eps_k != -1) {
        throw std::invalid_argument("spin: eps_k must be +1 or -1");
    }
    int prod = 1;
    for (int s : eps_h) prod *= s;
    if (kappa > 0 && prod != 1) {
        throw std::invalid_argument("spin: product of eps_h must be +1");
    }
}

void SurfaceData::validate() const {
    if (genus < 0 || kappa < 0) {
        throw std::invalid_argument("surface: genus and kappa must be >= 0");
    }
    if (2 * genus - 2 + kappa <= 0) {
        throw std::invalid_argument("surface: need 2g - 2 + kappa > 0 (cofinite volume)");
    }
    spin.validate(genus, kappa);
}

int SurfaceData::kappa_trivial() const {
    int n = 0;
    for (int s : spin.eps_h)
        if (s == 1) ++n;
    return n;
}

double SurfaceData::volume() const {
    const int chi = 2 * genus - 2 + kappa;
    if (chi <= 0) {
        throw std::invalid_argument("surface: nonpositive volume");
    }
    return 2.0 * kPi * chi;
}

void HyperbolicClass::validate() const {
    if (!(u > 0.0)) throw std::invalid_argument("hyperbolic class: u must be > 0");
    if (index < 1) throw std::invalid_argument("hyperbolic class: index must be >= 1");
    if (!std::isfinite(chi_trace)) {
        throw std::invalid_argument("hyperbolic class: chi_trace must be finite");
    }
}

long count_spin_structures(int g, int kappa) {
    if (g < 0 || kappa < 0) {
        throw std::invalid_argument("count_spin_structures: need g, kappa >= 0");
    }
    const int exponent = 2 * g + (kappa >= 1 ? kappa : 1);
    return 1L << exponent;
}

bool totally_nontrivial_exists(int kappa) {
    if (kappa < 1) throw std::invalid_argument("totally_nontrivial_exists: need kappa >= 1");
    return kappa % 2 == 0;
}

std::vector<SpinStructure> enumerate_spin_structures(int g, int kappa) {
    if (g < 0 || kappa < 0) {
        throw std::invalid_argument("enumerate_spin_structures: need g, kappa >= 0");
    }
    const int free_h = kappa >= 1 ? kappa - 1 : 0;
    const int bits = 2 * g + free_h + 1;
    std::vector<SpinStructure> out;
    out.reserve(1u << bits);
    for (long mask = 0; mask < (1L << bits); ++mask) {
        SpinStructure s;
        int pos = 0;
        auto sign = [&](int p) { return (mask >> p) & 1 ? -1 : 1; };
        for (int i = 0; i < g; ++i) s.eps_x.push_back(sign(pos++));
        for (int i = 0; i < g; ++i) s.eps_y.push_back(sign(pos++));
        int prod = 1;
        for (int j = 0; j < free_h; ++j) {
            const int sj = sign(pos++);
            s.eps_h.push_back(sj);
            prod *= sj;
        }
        if (kappa >= 1) s.eps_h.push_back(prod);  // product constraint
        s.eps_k = sign(pos++);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace etainv
