#include "typicality/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace typicality {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK dqk15 constants). Odd
// Kronrod indices coincide with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278,
};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct Panel {
    double a, b;
    double value;  // Kronrod estimate
    double error;  // |Kronrod - Gauss|
};

Panel evaluate_panel(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    resk *= half;
    resg *= half;
    return Panel{a, b, resk, std::fabs(resk - resg)};
}

struct WorstFirst {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;  // deterministic tie-break
    }
};

// Final accumulation over panels sorted by position, so the result does not
// depend on the heap's internal ordering.
QuadResult accumulate_sorted(std::vector<Panel> panels, long evaluations) {
    std::sort(panels.begin(), panels.end(),
              [](const Panel& lhs, const Panel& rhs) { return lhs.a < rhs.a; });
    QuadResult out;
    for (const Panel& p : panels) {
        out.value += p.value;
        out.abs_error_estimate += p.error;
    }
    out.evaluations = evaluations;
    return out;
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    if (!(b >= a)) throw std::domain_error("integrate_finite: require b >= a");
    if (a == b) return QuadResult{0.0, 0.0, 0};

    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> heap;
    long evaluations = 15;
    int subdivisions = 0;
    Panel first = evaluate_panel(f, a, b);
    double value_sum = first.value;
    double error_sum = first.error;
    heap.push(first);

    auto drain = [&heap, &evaluations]() {
        std::vector<Panel> panels;
        panels.reserve(heap.size());
        while (!heap.empty()) {
            panels.push_back(heap.top());
            heap.pop();
        }
        return accumulate_sorted(std::move(panels), evaluations);
    };

    while (error_sum > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value_sum))) {
        const Panel worst = heap.top();
        if (subdivisions >= cfg.max_subdivisions || worst.b - worst.a <= cfg.min_panel_width) {
            throw QuadratureError("integrate_finite: subdivision budget exhausted", drain());
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        value_sum += left.value + right.value - worst.value;
        error_sum += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        evaluations += 30;
        ++subdivisions;
    }
    return drain();
}

QuadResult integrate_decaying(const Integrand& f, double a, double decay_rate,
                              const QuadConfig& cfg) {
    if (!(decay_rate > 0.0)) throw std::domain_error("integrate_decaying: decay_rate must be > 0");
    // Probe the decay-compensated scale of f near the left end; the first
    // probe sits epsilon inside the interval in case a is a removable limit.
    double scale = 0.0;
    for (int j = 0; j <= 8; ++j) {
        const double u = a + (j == 0 ? 1e-12 : 0.5 * j) / decay_rate;
        const double fu = f(u);
        if (std::isfinite(fu)) {
            scale = std::max(scale, std::fabs(fu) * std::exp(decay_rate * (u - a)));
        }
    }
    scale = std::max(scale, 1e-30);
    double span = std::max(10.0, std::log(100.0 * scale / cfg.abs_tol)) / decay_rate;

    // The probed scale undershoots when f carries a growing prefactor; push
    // the cut out until the tail bound 2|f(u_t)|/rate (valid for prefactors
    // growing slower than e^{rate u/2}) clears half the tolerance.
    auto cut_magnitude = [&](double u_t) {
        double m = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double fu = f(u_t - j / (3.0 * decay_rate));
            if (std::isfinite(fu)) m = std::max(m, std::fabs(fu));
        }
        return m;
    };
    double tail_bound = 2.0 * cut_magnitude(a + span) / decay_rate;
    for (int round = 0; round < 16 && tail_bound > 0.5 * cfg.abs_tol; ++round) {
        span += std::log(tail_bound / (0.25 * cfg.abs_tol)) / decay_rate;
        tail_bound = 2.0 * cut_magnitude(a + span) / decay_rate;
    }

    QuadResult result = integrate_finite(f, a, a + span, cfg);
    result.abs_error_estimate += tail_bound;
    return result;
}

}  // namespace typicality
