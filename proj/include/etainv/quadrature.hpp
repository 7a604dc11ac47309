#pragma once

#include <functional>
#include <string>

namespace etainv::quad {

// Controls for the adaptive Gauss-Kronrod engine and the Gaussian tau-cutoff
// rule used by all spectral-side integrals.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    double cutoff_margin = 2.0;
    int max_intervals = 20000;
    int initial_segments = 8;
    std::string rule = "adaptive-G7K15";

    // |tau| <= sqrt(ln(1/eps_tail)/(4t)) + margin covers the e^{-4 tau^2 t}
    // factor of h_{t,r} down to eps_tail.
    double tau_cutoff(double t, double eps_tail) const;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evals = 0;
};

// Adaptive G7/K15 on [a, b]; worst-interval bisection until the summed error
// estimate is below spec.abs_tol. Throws quadrature_error on budget overrun.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec);

// Convenience: integrate with a tolerance override.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec, double abs_tol);

}  // namespace etainv::quad
