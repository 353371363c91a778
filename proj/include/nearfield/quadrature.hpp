#pragma once

// Adaptive tensor-product Gauss-Legendre quadrature on rectangles (and its 1D
// counterpart on intervals).
//
// Each panel is integrated with the base rule of n points per axis and with the
// doubled rule of 2n points. The 2n x 2n tensor rule gives the panel value; the
// mixed rules (n x 2n, 2n x n) give per-axis error estimates. The panel with the
// largest estimated error is bisected along its worse axis until the summed
// estimate drops below rel_tol * |value| or the panel budget runs out.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "nearfield/geometry.hpp"
#include "nearfield/summation.hpp"

namespace nearfield {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    long max_panels = 1L << 20;
    int base_order = 16;

    /// rel_tol in (1e-14, 1e-2), base_order >= 4, max_panels >= 1.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long panels = 0;
    bool converged = false;
};

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of the given order (Newton iteration on P_n, accurate to ~1 ulp).
const GaussLegendreRule& gauss_legendre(int order);

namespace detail {

struct Panel2d {
    Rect rect;
    double value = 0.0;
    double err_x = 0.0;
    double err_z = 0.0;
    bool active = true;

    double error() const { return err_x + err_z; }
};

struct Panel1d {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
    bool active = true;
};

/// Sorted, de-duplicated breakpoints strictly inside (lo, hi), with lo and hi appended.
std::vector<double> breakpoints(double lo, double hi, std::span<const double> cuts);

template <typename F>
Panel2d evaluate_panel(const F& f, const Rect& rect, const GaussLegendreRule& lo,
                       const GaussLegendreRule& hi) {
    const double cx = 0.5 * (rect.x_min + rect.x_max);
    const double hx = 0.5 * rect.width();
    const double cz = 0.5 * (rect.z_min + rect.z_max);
    const double hz = 0.5 * rect.height();
    const std::size_t nh = hi.nodes.size();
    const std::size_t nl = lo.nodes.size();

    std::vector<double> xs_hi(nh), zs_hi(nh), xs_lo(nl), zs_lo(nl);
    for (std::size_t i = 0; i < nh; ++i) {
        xs_hi[i] = cx + hx * hi.nodes[i];
        zs_hi[i] = cz + hz * hi.nodes[i];
    }
    for (std::size_t i = 0; i < nl; ++i) {
        xs_lo[i] = cx + hx * lo.nodes[i];
        zs_lo[i] = cz + hz * lo.nodes[i];
    }

    double q_hh = 0.0;
    double q_lh = 0.0;  // low order in x
    double q_hl = 0.0;  // low order in z
    for (std::size_t j = 0; j < nh; ++j) {
        double row_hh = 0.0;
        for (std::size_t i = 0; i < nh; ++i) {
            row_hh += hi.weights[i] * f(xs_hi[i], zs_hi[j]);
        }
        q_hh += hi.weights[j] * row_hh;
        double row_lh = 0.0;
        for (std::size_t i = 0; i < nl; ++i) {
            row_lh += lo.weights[i] * f(xs_lo[i], zs_hi[j]);
        }
        q_lh += hi.weights[j] * row_lh;
    }
    for (std::size_t j = 0; j < nl; ++j) {
        double row_hl = 0.0;
        for (std::size_t i = 0; i < nh; ++i) {
            row_hl += hi.weights[i] * f(xs_hi[i], zs_lo[j]);
        }
        q_hl += lo.weights[j] * row_hl;
    }
    const double jac = hx * hz;
    Panel2d p;
    p.rect = rect;
    p.value = jac * q_hh;
    p.err_x = std::abs(jac * (q_lh - q_hh));
    p.err_z = std::abs(jac * (q_hl - q_hh));
    return p;
}

template <typename F>
Panel1d evaluate_panel(const F& f, double a, double b, const GaussLegendreRule& lo,
                       const GaussLegendreRule& hi) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double q_hi = 0.0;
    for (std::size_t i = 0; i < hi.nodes.size(); ++i) {
        q_hi += hi.weights[i] * f(c + h * hi.nodes[i]);
    }
    double q_lo = 0.0;
    for (std::size_t i = 0; i < lo.nodes.size(); ++i) {
        q_lo += lo.weights[i] * f(c + h * lo.nodes[i]);
    }
    return {a, b, h * q_hi, std::abs(h * (q_lo - q_hi)), true};
}

inline bool splittable(double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    return mid > lo && mid < hi;
}

/// Sum over active panels in index order.
double running_total(const std::vector<Panel2d>& panels, double* error_sum);
double running_total(const std::vector<Panel1d>& panels, double* error_sum);

/// Pairwise sum over active panels sorted by coordinates; independent of the
/// order in which panels were refined.
double deterministic_total(const std::vector<Panel2d>& panels, double* error_sum);
double deterministic_total(const std::vector<Panel1d>& panels, double* error_sum);

// Value and error are tracked incrementally and recounted exactly every so often.
inline long recount_interval(long active) { return std::max(256L, active / 4); }

}  // namespace detail

/// Integrates f(x, z) over rect. x_cuts / z_cuts seed the initial panel grid,
/// typically around a known peak of the integrand.
template <typename F>
QuadratureResult integrate_2d(const F& f, const Rect& rect, const QuadratureSpec& spec,
                              std::span<const double> x_cuts = {},
                              std::span<const double> z_cuts = {}) {
    spec.validate();
    QuadratureResult result;
    if (!(rect.width() > 0.0) || !(rect.height() > 0.0)) {
        result.converged = true;
        return result;
    }
    const auto& lo = gauss_legendre(spec.base_order);
    const auto& hi = gauss_legendre(2 * spec.base_order);

    std::vector<detail::Panel2d> panels;
    const auto xb = detail::breakpoints(rect.x_min, rect.x_max, x_cuts);
    const auto zb = detail::breakpoints(rect.z_min, rect.z_max, z_cuts);
    for (std::size_t j = 0; j + 1 < zb.size(); ++j) {
        for (std::size_t i = 0; i + 1 < xb.size(); ++i) {
            panels.push_back(detail::evaluate_panel(f, Rect{xb[i], xb[i + 1], zb[j], zb[j + 1]}, lo, hi));
        }
    }

    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry> queue;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t k = 0; k < panels.size(); ++k) {
        queue.emplace(panels[k].error(), k);
        value += panels[k].value;
        error += panels[k].error();
    }

    long active = static_cast<long>(panels.size());
    long since_recount = 0;
    bool converged = false;
    while (true) {
        if (error <= spec.rel_tol * std::abs(value) ||
            since_recount >= detail::recount_interval(active)) {
            value = detail::running_total(panels, &error);
            since_recount = 0;
            if (error <= spec.rel_tol * std::abs(value)) {
                converged = true;
                break;
            }
        }
        if (queue.empty() || active >= spec.max_panels) {
            break;
        }
        const std::size_t k = queue.top().second;
        queue.pop();
        const detail::Panel2d parent = panels[k];
        const Rect& r = parent.rect;
        const bool split_x = parent.err_x >= parent.err_z;
        Rect a = r;
        Rect b = r;
        const bool can_x = detail::splittable(r.x_min, r.x_max);
        const bool can_z = detail::splittable(r.z_min, r.z_max);
        if (can_x && (split_x || !can_z)) {
            a.x_max = b.x_min = 0.5 * (r.x_min + r.x_max);
        } else if (can_z) {
            a.z_max = b.z_min = 0.5 * (r.z_min + r.z_max);
        } else {
            continue;  // panel at floating-point resolution; keep it as is
        }
        panels[k].active = false;
        value -= parent.value;
        error -= parent.error();
        for (const Rect& child : {a, b}) {
            panels.push_back(detail::evaluate_panel(f, child, lo, hi));
            queue.emplace(panels.back().error(), panels.size() - 1);
            value += panels.back().value;
            error += panels.back().error();
        }
        ++active;
        ++since_recount;
    }

    result.value = detail::deterministic_total(panels, &result.error_estimate);
    result.panels = active;
    result.converged = converged;
    return result;
}

/// Integrates f(x) over [a, b]; cuts seed the initial panels.
template <typename F>
QuadratureResult integrate_1d(const F& f, double a, double b, const QuadratureSpec& spec,
                              std::span<const double> cuts = {}) {
    spec.validate();
    QuadratureResult result;
    if (!(b > a)) {
        result.converged = true;
        return result;
    }
    const auto& lo = gauss_legendre(spec.base_order);
    const auto& hi = gauss_legendre(2 * spec.base_order);

    std::vector<detail::Panel1d> panels;
    const auto xb = detail::breakpoints(a, b, cuts);
    for (std::size_t i = 0; i + 1 < xb.size(); ++i) {
        panels.push_back(detail::evaluate_panel(f, xb[i], xb[i + 1], lo, hi));
    }

    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry> queue;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t k = 0; k < panels.size(); ++k) {
        queue.emplace(panels[k].error, k);
        value += panels[k].value;
        error += panels[k].error;
    }

    long active = static_cast<long>(panels.size());
    long since_recount = 0;
    bool converged = false;
    while (true) {
        if (error <= spec.rel_tol * std::abs(value) ||
            since_recount >= detail::recount_interval(active)) {
            value = detail::running_total(panels, &error);
            since_recount = 0;
            if (error <= spec.rel_tol * std::abs(value)) {
                converged = true;
                break;
            }
        }
        if (queue.empty() || active >= spec.max_panels) {
            break;
        }
        const std::size_t k = queue.top().second;
        queue.pop();
        const detail::Panel1d parent = panels[k];
        if (!detail::splittable(parent.a, parent.b)) {
            continue;
        }
        const double mid = 0.5 * (parent.a + parent.b);
        panels[k].active = false;
        value -= parent.value;
        error -= parent.error;
        for (const auto& [lo_end, hi_end] : {std::pair{parent.a, mid}, std::pair{mid, parent.b}}) {
            panels.push_back(detail::evaluate_panel(f, lo_end, hi_end, lo, hi));
            queue.emplace(panels.back().error, panels.size() - 1);
            value += panels.back().value;
            error += panels.back().error;
        }
        ++active;
        ++since_recount;
    }

    result.value = detail::deterministic_total(panels, &result.error_estimate);
    result.panels = active;
    result.converged = converged;
    return result;
}

}  // namespace nearfield
