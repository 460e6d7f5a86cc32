#pragma once

// Reference implementations used only by the tests. They deliberately avoid
// the library's recurrences and adaptive quadrature.

#include <cmath>
#include <cstddef>
#include <numbers>

namespace oracle {

inline double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

// H_n(x) = n! sum_m (-1)^m (2x)^(n-2m) / (m! (n-2m)!)
inline double hermite_series(std::size_t n, double x) {
    double total = 0.0;
    for (std::size_t m = 0; 2 * m <= n; ++m) {
        const double term = std::pow(2.0 * x, static_cast<double>(n - 2 * m)) / (factorial(m) * factorial(n - 2 * m));
        total += (m % 2 ? -term : term);
    }
    return factorial(n) * total;
}

// (2^n n!)^{-1/2} pi^{-1/4} e^{-x^2/2} H_n(x), fine for n <= ~20.
inline double qho_psi(std::size_t n, double x) {
    const double norm = 1.0 / std::sqrt(std::pow(2.0, static_cast<double>(n)) * factorial(n) * std::sqrt(std::numbers::pi));
    return norm * std::exp(-0.5 * x * x) * hermite_series(n, x);
}

// Composite Simpson rule with an even number of panels.
template <class F>
double simpson(const F& f, double a, double b, std::size_t panels = 20000) {
    if (panels % 2) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    double total = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i) total += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
    return total * h / 3.0;
}

template <class F>
double central_difference(const F& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double second_difference(const F& f, double x, double h = 1e-4) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace oracle
