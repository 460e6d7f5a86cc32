#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgbound/quadrature.hpp"

namespace lgbound {

inline constexpr double kPi = std::numbers::pi;

/// Physicists' Hermite polynomial H_n(x) by forward recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}. Unnormalized, so it overflows for large
/// n|x|; use QhoSystem for eigenfunction values.
inline double hermite_eval(std::size_t n, double x) {
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 2.0 * x;
    for (std::size_t k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Generalized Laguerre polynomial L_n^{(alpha)}(z) by the three-term recurrence.
inline double laguerre_eval(std::size_t n, double alpha, double z) {
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 1.0 + alpha - z;
    for (std::size_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double next = ((2.0 * kd + 1.0 + alpha - z) * cur - (kd + alpha) * prev) / (kd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// A one-dimensional bound potential with a known eigensystem, in
/// dimensionless units where the Schroedinger equation reads
/// psi'' = 2 (V - eps) psi.
class BoundSystem {
public:
    virtual ~BoundSystem() = default;

    virtual std::string name() const = 0;
    virtual double energy(std::size_t n) const = 0;
    virtual double psi(std::size_t n, double x) const = 0;
    virtual double psi_prime(std::size_t n, double x) const = 0;
    /// Number of bound states, or nullopt when the spectrum is unbounded.
    virtual std::optional<std::size_t> num_states() const = 0;
    virtual bool is_symmetric() const = 0;
    virtual double potential(double x) const = 0;
    /// Finite interval outside which |psi_n| is negligible (below ~1e-16 of
    /// its peak); used to truncate quadrature domains.
    virtual std::pair<double, double> support(std::size_t n) const = 0;

    /// Phase per unit of user time carried by one unit of dimensionless
    /// energy. 1 for the oscillator (time is omega*tau); 1/lambda for Morse
    /// (time is omega0*tau).
    virtual double phase_rate() const { return 1.0; }

    /// True when all phase differences (eps_k - eps_n) * phase_rate are
    /// integers, so correlators are 2pi-periodic.
    virtual bool integer_gaps() const { return false; }

    /// Fills psi[k], dpsi[k] for k = 0..psi.size()-1 at one point.
    virtual void fill_rows(double x, std::span<double> psi_out, std::span<double> dpsi_out) const {
        for (std::size_t k = 0; k < psi_out.size(); ++k) {
            psi_out[k] = psi(k, x);
            dpsi_out[k] = psi_prime(k, x);
        }
    }

    bool has_state(std::size_t n) const {
        const auto count = num_states();
        return !count || n < *count;
    }

    void check_state(std::size_t n) const {
        if (!has_state(n))
            throw std::out_of_range(name() + ": state index " + std::to_string(n) +
                                    " exceeds the bound-state count " +
                                    std::to_string(*num_states()));
    }
};

/// Harmonic oscillator in natural units (hbar = m = omega = 1).
class QhoSystem final : public BoundSystem {
public:
    std::string name() const override { return "qho"; }
    double energy(std::size_t n) const override { return static_cast<double>(n) + 0.5; }
    std::optional<std::size_t> num_states() const override { return std::nullopt; }
    bool is_symmetric() const override { return true; }
    bool integer_gaps() const override { return true; }
    double potential(double x) const override { return 0.5 * x * x; }

    std::pair<double, double> support(std::size_t n) const override {
        const double edge = std::sqrt(2.0 * static_cast<double>(n) + 1.0) + 12.0;
        return {-edge, edge};
    }

    double psi(std::size_t n, double x) const override { return walk(n, x).first; }

    /// psi_n' = -x psi_n + sqrt(2n) psi_{n-1}.
    double psi_prime(std::size_t n, double x) const override {
        const auto [cur, prev] = walk(n, x);
        return -x * cur + std::sqrt(2.0 * static_cast<double>(n)) * prev;
    }

    void fill_rows(double x, std::span<double> psi_out, std::span<double> dpsi_out) const override {
        const std::size_t count = psi_out.size();
        if (count == 0) return;
        // Scaled recurrence: value_k = p_k * exp(log_scale).
        double log_scale = -0.5 * x * x - 0.25 * std::log(kPi);
        double factor = std::exp(log_scale);
        double prev = 0.0;
        double cur = 1.0;
        double prev_value = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            const double value = cur * factor;
            psi_out[k] = value;
            dpsi_out[k] = -x * value + std::sqrt(2.0 * static_cast<double>(k)) * prev_value;
            prev_value = value;
            const double kd = static_cast<double>(k);
            const double next = std::sqrt(2.0 / (kd + 1.0)) * x * cur - std::sqrt(kd / (kd + 1.0)) * prev;
            prev = cur;
            cur = next;
            if (std::abs(cur) > kRescale) {
                cur /= kRescale;
                prev /= kRescale;
                log_scale += kLogRescale;
                factor = std::exp(log_scale);
                // prev_value already holds the unscaled psi_k.
            }
        }
    }

private:
    static constexpr double kRescale = 1e150;
    static inline const double kLogRescale = std::log(1e150);

    // Returns (psi_n(x), psi_{n-1}(x)) via the normalized recurrence
    // psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1}.
    static std::pair<double, double> walk(std::size_t n, double x) {
        double log_scale = -0.5 * x * x - 0.25 * std::log(kPi);
        double prev = 0.0;
        double cur = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double kd = static_cast<double>(k);
            const double next = std::sqrt(2.0 / (kd + 1.0)) * x * cur - std::sqrt(kd / (kd + 1.0)) * prev;
            prev = cur;
            cur = next;
            if (std::abs(cur) > kRescale) {
                cur /= kRescale;
                prev /= kRescale;
                log_scale += kLogRescale;
            }
        }
        const double factor = std::exp(log_scale);
        return {cur * factor, prev * factor};
    }
};

inline double qho_psi(std::size_t n, double x) { return QhoSystem{}.psi(n, x); }
inline double qho_psi_prime(std::size_t n, double x) { return QhoSystem{}.psi_prime(n, x); }

/// Morse potential V(r) = (lambda^2/2)(e^{-2r} - 2e^{-r}) with a = 1 and the
/// well minimum at r = 0. Eigenfunctions in the scaled coordinate
/// z = 2 lambda e^{-r} are N_n z^{lambda-n-1/2} e^{-z/2} L_n^{(2lambda-2n-1)}(z),
/// defined for all real r.
class MorseSystem final : public BoundSystem {
public:
    explicit MorseSystem(double lambda) : lambda_(lambda) {
        if (!(lambda > 0.5) || !std::isfinite(lambda))
            throw std::invalid_argument("MorseSystem: lambda must exceed 1/2");
        // Bound states are n = 0..floor(lambda - 1/2) with lambda - n - 1/2 > 0;
        // when lambda - 1/2 is an integer the top candidate is not normalizable.
        bound_ = static_cast<std::size_t>(std::floor(lambda - 0.5)) + 1;
        if (static_cast<double>(bound_ - 1) >= lambda - 0.5) --bound_;
        log_norm_.resize(bound_);
        for (std::size_t n = 0; n < bound_; ++n) log_norm_[n] = numeric_log_norm(n);
    }

    double lambda() const { return lambda_; }

    std::string name() const override { return "morse"; }
    std::optional<std::size_t> num_states() const override { return bound_; }
    bool is_symmetric() const override { return false; }
    double phase_rate() const override { return 1.0 / lambda_; }

    double energy(std::size_t n) const override {
        check_state(n);
        const double p = lambda_ - static_cast<double>(n) - 0.5;
        return -0.5 * p * p;
    }

    double potential(double r) const override {
        const double e = std::exp(-r);
        return 0.5 * lambda_ * lambda_ * (e * e - 2.0 * e);
    }

    /// Coordinate of the well minimum, where the dichotomic split sits.
    double well_minimum() const { return 0.0; }

    /// Analytic normalization sqrt(n! (2lambda-2n-1) / Gamma(2lambda-n)),
    /// exposed for comparison with the numerical constant.
    double analytic_norm(std::size_t n) const { return std::exp(analytic_log_norm(n)); }
    double numeric_norm(std::size_t n) const {
        check_state(n);
        return std::exp(log_norm_[n]);
    }

    double psi(std::size_t n, double r) const override {
        check_state(n);
        return eval(n, r, log_norm_[n]).first;
    }

    double psi_prime(std::size_t n, double r) const override {
        check_state(n);
        return eval(n, r, log_norm_[n]).second;
    }

    std::pair<double, double> support(std::size_t n) const override {
        check_state(n);
        const double nd = static_cast<double>(n);
        const double p = lambda_ - nd - 0.5;
        const double peak = 2.0 * p;
        // Log-envelope z^q e^{-z/2} relative to its maximum at z = 2q; the
        // Laguerre factor adds at most z^n on the large-z side.
        auto drop = [peak](double q, double z) { return q * std::log(z / peak) - 0.5 * (z - peak); };
        constexpr double kDepth = 50.0;
        double lo = 0.0, hi = peak;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (drop(p, mid) < -kDepth ? lo : hi) = mid;
        }
        const double z_lo = std::max(lo, 1e-300);
        lo = peak;
        hi = peak + 4.0 * kDepth + 4.0 * (p + nd) * std::log(2.0 + (p + nd));
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (drop(p + nd, mid) > -kDepth ? lo : hi) = mid;
        }
        const double z_hi = hi;
        const double two_lambda = 2.0 * lambda_;
        return {std::log(two_lambda / z_hi), std::log(two_lambda / z_lo)};
    }

private:
    double lambda_;
    std::size_t bound_ = 0;
    std::vector<double> log_norm_;

    double analytic_log_norm(std::size_t n) const {
        const double nd = static_cast<double>(n);
        return 0.5 * (std::lgamma(nd + 1.0) + std::log(2.0 * lambda_ - 2.0 * nd - 1.0) -
                      std::lgamma(2.0 * lambda_ - nd));
    }

    // (psi(r), dpsi/dr) for a given log normalization.
    std::pair<double, double> eval(std::size_t n, double r, double log_norm) const {
        const double nd = static_cast<double>(n);
        const double p = lambda_ - nd - 0.5;
        const double alpha = 2.0 * lambda_ - 2.0 * nd - 1.0;
        const double log_z = std::log(2.0 * lambda_) - r;
        const double z = std::exp(log_z);
        const double log_pref = log_norm + p * log_z - 0.5 * z;
        if (log_pref < -745.0 || !std::isfinite(z)) return {0.0, 0.0};
        const double pref = std::exp(log_pref);
        const double lag = laguerre_eval(n, alpha, z);
        const double lag_prime = n == 0 ? 0.0 : -laguerre_eval(n - 1, alpha + 1.0, z);
        const double value = pref * lag;
        const double dpsi_dz = pref * ((p / z - 0.5) * lag + lag_prime);
        return {value, -z * dpsi_dz};  // dz/dr = -z
    }

    // Normalizes numerically: with the analytic constant as a pre-scale,
    // integrate psi^2 dr = psi^2 dz / z over z and correct.
    double numeric_log_norm(std::size_t n) const {
        const double nd = static_cast<double>(n);
        const double p = lambda_ - nd - 0.5;
        const double alpha = 2.0 * lambda_ - 2.0 * nd - 1.0;
        const double log_n0 = analytic_log_norm(n);
        auto density = [&](double z) {
            if (z <= 0.0) return 0.0;
            const double lag = laguerre_eval(n, alpha, z);
            const double log_w = 2.0 * (log_n0 + p * std::log(z) - 0.5 * z) - std::log(z);
            if (log_w < -745.0) return 0.0;
            return std::exp(log_w) * lag * lag;
        };
        const double z_peak = 2.0 * lambda_;
        const double z_hi = 2.0 * lambda_ + 15.0 * std::sqrt(2.0 * lambda_) + 80.0;
        QuadratureOptions opts;
        opts.abs_tol = 1e-14;
        opts.rel_tol = 1e-14;
        opts.max_subintervals = 20000;
        double total = 0.0;
        // Panels aligned with the gamma-like envelope z^{2 lambda - 2} e^{-z}.
        const double breaks[] = {0.0, 0.25 * z_peak, 0.5 * z_peak, z_peak, 1.5 * z_peak, z_hi};
        for (std::size_t i = 0; i + 1 < std::size(breaks); ++i)
            total += integrate_adaptive(density, breaks[i], breaks[i + 1], opts).value;
        return log_n0 - 0.5 * std::log(total);
    }
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct SuperpositionState {
    double theta = 0.0;
    double phi = 0.0;

    SuperpositionState() = default;
    SuperpositionState(double theta_in, double phi_in) : theta(theta_in), phi(phi_in) {
        if (!(theta >= 0.0 && theta <= kPi))
            throw std::invalid_argument("SuperpositionState: theta must lie in [0, pi]");
        if (!(phi >= 0.0 && phi <= 2.0 * kPi))
            throw std::invalid_argument("SuperpositionState: phi must lie in [0, 2pi]");
    }

    std::complex<double> a() const { return {std::cos(0.5 * theta), 0.0}; }
    std::complex<double> b() const { return std::polar(std::sin(0.5 * theta), phi); }
    double ground_weight() const { return std::norm(a()); }
    double excited_weight() const { return std::norm(b()); }
};

}  // namespace lgbound
