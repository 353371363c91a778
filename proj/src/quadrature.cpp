#include "nearfield/quadrature.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace nearfield {

void QuadratureSpec::validate() const {
    if (!(rel_tol > 1e-14 && rel_tol < 1e-2)) {
        throw ValidationError("quadrature rel_tol must lie in (1e-14, 1e-2), got " + std::to_string(rel_tol));
    }
    if (base_order < 4) {
        throw ValidationError("quadrature base_order must be at least 4");
    }
    if (max_panels < 1) {
        throw ValidationError("quadrature max_panels must be positive");
    }
}

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi's initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, compute_rule(order)).first;
    }
    return it->second;
}

namespace detail {

std::vector<double> breakpoints(double lo, double hi, std::span<const double> cuts) {
    std::vector<double> points{lo};
    for (double c : cuts) {
        if (c > lo && c < hi) {
            points.push_back(c);
        }
    }
    points.push_back(hi);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

double running_total(const std::vector<Panel2d>& panels, double* error_sum) {
    double value = 0.0;
    double error = 0.0;
    for (const auto& p : panels) {
        if (p.active) {
            value += p.value;
            error += p.error();
        }
    }
    *error_sum = error;
    return value;
}

double running_total(const std::vector<Panel1d>& panels, double* error_sum) {
    double value = 0.0;
    double error = 0.0;
    for (const auto& p : panels) {
        if (p.active) {
            value += p.value;
            error += p.error;
        }
    }
    *error_sum = error;
    return value;
}

double deterministic_total(const std::vector<Panel2d>& panels, double* error_sum) {
    std::vector<const Panel2d*> live;
    for (const auto& p : panels) {
        if (p.active) {
            live.push_back(&p);
        }
    }
    std::sort(live.begin(), live.end(), [](const Panel2d* a, const Panel2d* b) {
        return std::tie(a->rect.z_min, a->rect.x_min, a->rect.z_max, a->rect.x_max) <
               std::tie(b->rect.z_min, b->rect.x_min, b->rect.z_max, b->rect.x_max);
    });
    const long n = static_cast<long>(live.size());
    auto at = [&](long i) { return live[static_cast<std::size_t>(i)]; };
    *error_sum = pairwise_sum_generated(0L, n, [&](long i) { return at(i)->error(); });
    return pairwise_sum_generated(0L, n, [&](long i) { return at(i)->value; });
}

double deterministic_total(const std::vector<Panel1d>& panels, double* error_sum) {
    std::vector<const Panel1d*> live;
    for (const auto& p : panels) {
        if (p.active) {
            live.push_back(&p);
        }
    }
    std::sort(live.begin(), live.end(), [](const Panel1d* a, const Panel1d* b) {
        return std::tie(a->a, a->b) < std::tie(b->a, b->b);
    });
    const long n = static_cast<long>(live.size());
    auto at = [&](long i) { return live[static_cast<std::size_t>(i)]; };
    *error_sum = pairwise_sum_generated(0L, n, [&](long i) { return at(i)->error; });
    return pairwise_sum_generated(0L, n, [&](long i) { return at(i)->value; });
}

}  // namespace detail

}  // namespace nearfield
