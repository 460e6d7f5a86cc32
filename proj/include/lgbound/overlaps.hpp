#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgbound/eigensystems.hpp"
#include "lgbound/parallel.hpp"
#include "lgbound/quadrature.hpp"
#include "lgbound/region.hpp"

namespace lgbound {

/// Series cutoff cap for systems whose overlap rows cost O(m) (the
/// oscillator); other systems are capped at kDefaultCutoffCap.
inline constexpr std::size_t kQhoCutoffCap = 10'000'000;
inline constexpr std::size_t kDefaultCutoffCap = 200;

/// Default truncation target for automatically chosen cutoffs.
inline constexpr double kDefaultTruncationTarget = 1e-3;

namespace detail {

inline QuadratureOptions overlap_quadrature() {
    QuadratureOptions opts;
    opts.abs_tol = 1e-12;
    opts.rel_tol = 1e-13;
    opts.max_subintervals = 8000;
    return opts;
}

inline double wronskian(const BoundSystem& sys, std::size_t k, std::size_t l, double x) {
    if (std::isinf(x)) return 0.0;
    return sys.psi_prime(k, x) * sys.psi(l, x) - sys.psi_prime(l, x) * sys.psi(k, x);
}

}  // namespace detail

/// J_kl(x1, x2) = int_{x1}^{x2} psi_k psi_l dx for k != l, from the boundary
/// values of the Wronskian psi_k' psi_l - psi_l' psi_k divided by
/// 2(eps_l - eps_k). Infinite endpoints contribute nothing.
inline double wronskian_overlap(const BoundSystem& sys, std::size_t k, std::size_t l, double x1,
                                double x2) {
    if (k == l)
        throw std::invalid_argument("wronskian_overlap: k == l is a pole; use diagonal_overlap");
    sys.check_state(k);
    sys.check_state(l);
    const double gap = sys.energy(l) - sys.energy(k);
    if (gap == 0.0) throw std::domain_error("wronskian_overlap: degenerate energies");
    if (x1 == x2) return 0.0;
    return (detail::wronskian(sys, k, l, x2) - detail::wronskian(sys, k, l, x1)) / (2.0 * gap);
}

/// int_{x1}^{x2} psi_k^2 dx by adaptive quadrature over the state's support.
/// Half-lines at the origin of a symmetric system return exactly 1/2.
inline double diagonal_overlap(const BoundSystem& sys, std::size_t k, double x1, double x2) {
    sys.check_state(k);
    if (x1 > x2) return -diagonal_overlap(sys, k, x2, x1);
    if (x1 == x2) return 0.0;
    if (x1 == -kInf && x2 == kInf) return 1.0;
    if (sys.is_symmetric() && ((x1 == 0.0 && x2 == kInf) || (x1 == -kInf && x2 == 0.0))) return 0.5;

    const auto [lo, hi] = sys.support(k);
    const double a = std::max(x1, lo);
    const double b = std::min(x2, hi);
    if (a >= b) return 0.0;
    auto density = [&](double x) {
        const double v = sys.psi(k, x);
        return v * v;
    };
    return integrate(density, a, b, detail::overlap_quadrature());
}

/// Diagonal overlap over a Region. When the region holds most of the state's
/// support the value is taken as 1 minus the complement, which keeps the
/// quadrature on the smaller set.
inline double region_diagonal(const BoundSystem& sys, std::size_t k, const Region& region) {
    const auto [lo, hi] = sys.support(k);
    const Region other = region.complement();
    if (region.measure_within(lo, hi) > other.measure_within(lo, hi) &&
        !(sys.is_symmetric() && region == Region::positive_half())) {
        double rest = 0.0;
        for (const auto& p : other.intervals()) rest += diagonal_overlap(sys, k, p.lo, p.hi);
        return 1.0 - rest;
    }
    double total = 0.0;
    for (const auto& p : region.intervals()) total += diagonal_overlap(sys, k, p.lo, p.hi);
    return total;
}

/// J_kl over a Region (any k, l).
inline double region_overlap(const BoundSystem& sys, std::size_t k, std::size_t l,
                             const Region& region) {
    if (k == l) return region_diagonal(sys, k, region);
    double total = 0.0;
    for (const auto& p : region.intervals()) total += wronskian_overlap(sys, k, l, p.lo, p.hi);
    return total;
}

/// Largest usable index for a row of length m+1 in this system.
inline std::size_t clamp_cutoff(const BoundSystem& sys, std::size_t m) {
    if (const auto count = sys.num_states()) return std::min(m, *count - 1);
    return m;
}

/// Accumulates the signed Wronskian W_nk = psi_n' psi_k - psi_k' psi_n at the
/// region's finite endpoints (+ at upper ends, - at lower ends).
inline std::vector<double> region_wronskian_row(const BoundSystem& sys, std::size_t n,
                                                const Region& region, std::size_t m) {
    std::vector<double> w(m + 1, 0.0);
    std::vector<double> psi(m + 1), dpsi(m + 1);
    const std::size_t width = std::max(m, n) + 1;
    if (width > psi.size()) {
        psi.resize(width);
        dpsi.resize(width);
    }
    auto add = [&](double x, double sign) {
        if (std::isinf(x)) return;
        sys.fill_rows(x, psi, dpsi);
        for (std::size_t k = 0; k <= m; ++k) w[k] += sign * (dpsi[n] * psi[k] - dpsi[k] * psi[n]);
    };
    for (const auto& p : region.intervals()) {
        add(p.hi, +1.0);
        add(p.lo, -1.0);
    }
    return w;
}

/// Row J_{n,k}(region) for k = 0..m (m clamped to the spectrum).
inline std::vector<double> overlap_row(const BoundSystem& sys, std::size_t n, const Region& region,
                                       std::size_t m) {
    sys.check_state(n);
    m = clamp_cutoff(sys, m);
    std::vector<double> row = region_wronskian_row(sys, n, region, m);
    const double en = sys.energy(n);
    for (std::size_t k = 0; k <= m; ++k) {
        if (k == n) continue;
        row[k] /= 2.0 * (sys.energy(k) - en);
    }
    if (n <= m) row[n] = region_diagonal(sys, n, region);
    return row;
}

/// Delta = J_nn(region) - sum_{k<=m} J_nk(region)^2: the weight of
/// P|n> missing from the first m+1 eigenstates. Clamped at zero.
inline double truncation_error_from_row(const std::vector<double>& row, double diagonal) {
    double sum = 0.0;
    for (double v : row) sum += v * v;
    return std::max(0.0, diagonal - sum);
}

inline double truncation_error(const BoundSystem& sys, std::size_t n, std::size_t m,
                               const Region& region) {
    const auto row = overlap_row(sys, n, region, m);
    const double diag = n < row.size() ? row[n] : region_diagonal(sys, n, region);
    return truncation_error_from_row(row, diag);
}

inline double truncation_error(const BoundSystem& sys, std::size_t n, std::size_t m,
                               double x1, double x2) {
    return truncation_error(sys, n, m, Region::interval(x1, x2));
}

struct Cutoff {
    std::size_t m = 0;
    double truncation_error = 0.0;
    bool target_met = false;
};

/// Smallest cutoff (on a doubling ladder) whose truncation error meets
/// `target`, capped at `cap` (0 selects the per-system default cap).
/// Finite spectra use every bound state.
inline Cutoff choose_cutoff(const BoundSystem& sys, std::size_t n, const Region& region,
                            double target = kDefaultTruncationTarget, std::size_t cap = 0) {
    sys.check_state(n);
    if (cap == 0) cap = sys.integer_gaps() ? kQhoCutoffCap : kDefaultCutoffCap;
    const double diag = region_diagonal(sys, n, region);
    if (const auto count = sys.num_states()) {
        const std::size_t m = std::min(*count - 1, cap);
        const double delta = truncation_error_from_row(overlap_row(sys, n, region, m), diag);
        return {m, delta, delta < target};
    }
    std::size_t m = std::min(cap, std::max<std::size_t>(n + 8, 64));
    while (true) {
        const double delta = truncation_error_from_row(overlap_row(sys, n, region, m), diag);
        if (delta < target) return {m, delta, true};
        if (m >= cap) return {m, delta, false};
        m = std::min(cap, 2 * m);
    }
}

/// Symmetric matrix of partial overlaps J_kl(region), k, l <= m_max.
/// Immutable after construction.
class OverlapTable {
public:
    OverlapTable(const BoundSystem& sys, Region region, std::size_t m_max, unsigned threads = 0)
        : region_(std::move(region)) {
        m_max = clamp_cutoff(sys, m_max);
        size_ = m_max + 1;
        values_.assign(size_ * size_, 0.0);

        std::vector<double> psi(size_), dpsi(size_);
        for (const auto& p : region_.intervals()) {
            for (const auto& [x, sign] : {std::pair{p.hi, 1.0}, std::pair{p.lo, -1.0}}) {
                if (std::isinf(x)) continue;
                sys.fill_rows(x, psi, dpsi);
                for (std::size_t k = 0; k < size_; ++k)
                    for (std::size_t l = k + 1; l < size_; ++l)
                        at(k, l) += sign * (dpsi[k] * psi[l] - dpsi[l] * psi[k]);
            }
        }
        for (std::size_t k = 0; k < size_; ++k) {
            for (std::size_t l = k + 1; l < size_; ++l) {
                at(k, l) /= 2.0 * (sys.energy(l) - sys.energy(k));
                at(l, k) = at(k, l);
            }
        }
        std::vector<double> diag(size_);
        parallel_for(size_, [&](std::size_t k) { diag[k] = region_diagonal(sys, k, region_); }, threads);
        for (std::size_t k = 0; k < size_; ++k) at(k, k) = diag[k];
    }

    std::size_t size() const { return size_; }
    const Region& region() const { return region_; }
    double operator()(std::size_t k, std::size_t l) const {
        if (k >= size_ || l >= size_) throw std::out_of_range("OverlapTable: index out of range");
        return values_[k * size_ + l];
    }

private:
    Region region_;
    std::size_t size_ = 0;
    std::vector<double> values_;

    double& at(std::size_t k, std::size_t l) { return values_[k * size_ + l]; }
};

namespace detail {

// Integration cut for the erfc(x/a) correction: erfc(9) ~ 4e-37.
inline double smoothing_reach(double a, double support_edge) { return std::min(9.0 * a, support_edge); }

}  // namespace detail

/// Oscillator overlap with the smoothed projector (1 + erf(x/a))/2 in place
/// of the step function. For k + l odd this equals J_kl(0, inf) minus
/// int_0^inf psi_k psi_l erfc(x/a) dx; same-parity pairs give delta_kl / 2.
inline double smoothed_overlap(std::size_t k, std::size_t l, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("smoothed_overlap: smoothing width must be positive");
    if (k == l) return 0.5;
    if ((k + l) % 2 == 0) return 0.0;
    const QhoSystem qho;
    const double sharp = wronskian_overlap(qho, k, l, 0.0, kInf);
    const double reach = detail::smoothing_reach(a, qho.support(std::max(k, l)).second);
    auto integrand = [&](double x) { return qho.psi(k, x) * qho.psi(l, x) * std::erfc(x / a); };
    return sharp - integrate(integrand, 0.0, reach, detail::overlap_quadrature());
}

/// Row of smoothed overlaps J_{n,k}(a) for k = 0..m.
inline std::vector<double> smoothed_overlap_row(std::size_t n, double a, std::size_t m) {
    if (!(a > 0.0)) throw std::invalid_argument("smoothed_overlap_row: smoothing width must be positive");
    const QhoSystem qho;
    std::vector<double> row = overlap_row(qho, n, Region::positive_half(), m);
    const std::size_t width = std::max(n, m) + 1;
    const double reach = detail::smoothing_reach(a, qho.support(width).second);
    std::vector<double> psi(width), dpsi(width);
    auto integrand = [&](double x, std::vector<double>& out) {
        qho.fill_rows(x, psi, dpsi);
        const double weight = psi[n] * std::erfc(x / a);
        for (std::size_t k = 0; k <= m; ++k) out[k] = weight * psi[k];
    };
    QuadratureOptions opts = detail::overlap_quadrature();
    opts.max_subintervals = 20000;
    const std::vector<double> correction = integrate_vector(integrand, m + 1, 0.0, reach, opts);
    for (std::size_t k = 0; k <= m; ++k) {
        if (k == n)
            row[k] = 0.5;
        else if ((k + n) % 2 == 0)
            row[k] = 0.0;
        else
            row[k] -= correction[k];
    }
    return row;
}

}  // namespace lgbound
