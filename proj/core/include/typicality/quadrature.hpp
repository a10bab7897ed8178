#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace typicality {

struct QuadConfig {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    int max_subdivisions = 2000;
    double min_panel_width = 1e-12;
};

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

// Thrown when the subdivision budget is exhausted; carries the best estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_estimate(best) {}
    QuadResult best_estimate;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7/15 on [a,b]; bisects the panel with the largest
// local error until the summed estimate meets the tolerance. Deterministic:
// the final value is accumulated over panels sorted by position.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg = {});

// Semi-infinite integral of an exponentially decaying integrand: truncates
// where exp(-decay_rate*(u-a)) falls below abs_tol/100 relative to the local
// scale of f, extends the cut while 2|f|/decay_rate there exceeds half the
// tolerance (covers prefactors growing slower than e^{decay_rate*u/2}), then
// defers to integrate_finite; the final tail bound joins the error estimate.
QuadResult integrate_decaying(const Integrand& f, double a, double decay_rate,
                              const QuadConfig& cfg = {});

}  // namespace typicality
