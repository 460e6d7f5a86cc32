#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgbound {

/// Raised when an adaptive quadrature exhausts its subdivision budget.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}

    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double value_;
    double error_estimate_;
};

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    std::size_t max_subintervals = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t subintervals = 0;
    bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of a scalar function on
/// a finite interval. The panel with the largest error estimate is bisected
/// until the summed estimate drops below max(abs_tol, rel_tol*|I|).
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b,
                                    const QuadratureOptions& opts = {}) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integrate_adaptive: interval must be finite");
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gk15(f, a, b));
    double total = panels.top().value;
    double total_err = panels.top().error;

    while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) &&
           panels.size() < opts.max_subintervals) {
        const detail::Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // cannot split further
            panels.push(worst);
            break;
        }
        const detail::Panel left = detail::gk15(f, worst.a, mid);
        const detail::Panel right = detail::gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Resum to shed the drift accumulated by incremental updates.
    total = 0.0;
    total_err = 0.0;
    out.subintervals = panels.size();
    while (!panels.empty()) {
        total += panels.top().value;
        total_err += panels.top().error;
        panels.pop();
    }
    out.value = sign * total;
    out.error = total_err;
    out.converged = total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    return out;
}

/// As integrate_adaptive, but throws QuadratureError on non-convergence.
template <class F>
double integrate(const F& f, double a, double b, const QuadratureOptions& opts = {}) {
    const QuadratureResult r = integrate_adaptive(f, a, b, opts);
    if (!r.converged)
        throw QuadratureError("quadrature did not converge (error estimate " +
                                  std::to_string(r.error) + ")",
                              r.value, r.error);
    return r.value;
}

/// Adaptive GK15 for a vector-valued integrand. `f(x, out)` fills `out` (size
/// `dim`). Refinement is driven by the largest component error, so every
/// component meets the tolerance.
template <class F>
std::vector<double> integrate_vector(const F& f, std::size_t dim, double a, double b,
                                     const QuadratureOptions& opts = {}) {
    struct VPanel {
        double a, b, error;
        std::vector<double> value;
    };
    std::vector<double> scratch_l(dim), scratch_r(dim), fc(dim);

    auto rule = [&](double lo, double hi) {
        VPanel p{lo, hi, 0.0, std::vector<double>(dim, 0.0)};
        std::vector<double> gauss(dim, 0.0);
        const double center = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        f(center, fc);
        for (std::size_t i = 0; i < dim; ++i) {
            p.value[i] = fc[i] * detail::kWgk[7];
            gauss[i] = fc[i] * detail::kWg[3];
        }
        for (std::size_t j = 0; j < 7; ++j) {
            const double dx = half * detail::kXgk[j];
            f(center - dx, scratch_l);
            f(center + dx, scratch_r);
            for (std::size_t i = 0; i < dim; ++i) {
                const double pair = scratch_l[i] + scratch_r[i];
                p.value[i] += detail::kWgk[j] * pair;
                if (j % 2 == 1) gauss[i] += detail::kWg[j / 2] * pair;
            }
        }
        for (std::size_t i = 0; i < dim; ++i) {
            p.error = std::max(p.error, std::abs((p.value[i] - gauss[i]) * half));
            p.value[i] *= half;
        }
        return p;
    };

    auto cmp = [](const VPanel& x, const VPanel& y) { return x.error < y.error; };
    std::priority_queue<VPanel, std::vector<VPanel>, decltype(cmp)> panels(cmp);
    panels.push(rule(a, b));
    double total_err = panels.top().error;
    while (total_err > opts.abs_tol && panels.size() < opts.max_subintervals) {
        VPanel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        VPanel left = rule(worst.a, mid);
        VPanel right = rule(mid, worst.b);
        total_err += left.error + right.error - worst.error;
        panels.push(std::move(left));
        panels.push(std::move(right));
    }

    std::vector<double> out(dim, 0.0);
    total_err = 0.0;
    while (!panels.empty()) {
        const VPanel& p = panels.top();
        for (std::size_t i = 0; i < dim; ++i) out[i] += p.value[i];
        total_err += p.error;
        panels.pop();
    }
    if (total_err > opts.abs_tol)
        throw QuadratureError("vector quadrature did not converge (error estimate " +
                                  std::to_string(total_err) + ")",
                              0.0, total_err);
    return out;
}

/// Golden-section search for the minimum of a unimodal function on [a, b].
template <class F>
std::pair<double, double> golden_section_min(const F& f, double a, double b,
                                             double tol = 1e-10) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

}  // namespace lgbound
