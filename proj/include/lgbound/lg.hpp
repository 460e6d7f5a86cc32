#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgbound/correlators.hpp"
#include "lgbound/parallel.hpp"

namespace lgbound {

/// A kernel counts as violated only when it is past its bound by more than this.
inline constexpr double kViolationTolerance = 1e-9;
/// Quantum minimum of the LG3 kernels.
inline constexpr double kLudersBound = -0.5;
/// Quantum maximum of the LG4 kernels.
inline const double kLg4QuantumMax = 2.0 * std::sqrt(2.0);

using Lg2Values = std::array<double, 12>;
using Lg3Values = std::array<double, 4>;
using Lg4Values = std::array<double, 8>;

/// Twelve LG2 kernels 1 + s1<Q_i> + s2<Q_j> + s1 s2 C_ij = 4 q(s1, s2), ordered
/// by time pair (12, 23, 13) then signs (++, +-, -+, --). Violated when < 0.
inline Lg2Values lg2_set(const MomentData& m12, const MomentData& m23, const MomentData& m13) {
    Lg2Values out{};
    const MomentData* pairs[] = {&m12, &m23, &m13};
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t s = 0; s < 4; ++s) out[4 * p + s] = 4.0 * pairs[p]->q_table[s];
    return out;
}

/// L1..L4; violated when < 0.
inline Lg3Values lg3_set(double c12, double c23, double c13) {
    return {1.0 + c12 + c23 + c13, 1.0 - c12 - c23 + c13, 1.0 + c12 - c23 - c13, 1.0 - c12 + c23 - c13};
}

/// The eight LG4 kernels: C12 + C23 + C34 + C14 with the minus sign moved
/// through each position, then the same four negated. Violated when > 2.
inline Lg4Values lg4_set(double c12, double c23, double c34, double c14) {
    const std::array<double, 4> c = {c12, c23, c34, c14};
    const double total = c[0] + c[1] + c[2] + c[3];
    Lg4Values out{};
    for (std::size_t j = 0; j < 4; ++j) {
        out[j] = total - 2.0 * c[j];
        out[j + 4] = -out[j];
    }
    return out;
}

/// Generic n-time kernels for cycle correlators (C12, C23, ..., C_{n-1,n},
/// C_1n): every sign pattern with an odd number of minus signs, in order of
/// the pattern's bitmask. Each must satisfy value <= n - 2.
inline std::vector<double> lgn_kernels(std::span<const double> cycle) {
    const std::size_t n = cycle.size();
    if (n < 2 || n > 24) throw std::invalid_argument("lgn_kernels: need 2..24 correlators");
    std::vector<double> out;
    out.reserve(std::size_t{1} << (n - 1));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if (std::popcount(mask) % 2 == 0) continue;
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i) v += (mask >> i & 1u) ? -cycle[i] : cycle[i];
        out.push_back(v);
    }
    return out;
}

inline double lgn_bound(std::size_t n) { return static_cast<double>(n) - 2.0; }

enum class Regime { I, II, III, IV };

inline std::string to_string(Regime r) {
    switch (r) {
        case Regime::I: return "I";
        case Regime::II: return "II";
        case Regime::III: return "III";
        case Regime::IV: return "IV";
    }
    return "?";
}

inline Regime regime_classify(bool lg3_violated, bool lg2_violated) {
    if (lg3_violated) return lg2_violated ? Regime::IV : Regime::II;
    return lg2_violated ? Regime::III : Regime::I;
}

/// All kernels at one tau for the time grid 0, tau, 2 tau, 3 tau.
struct LGSample {
    double tau = 0.0;
    Lg2Values lg2{};
    Lg3Values lg3{};
    Lg4Values lg4{};

    double lg2_min() const { return *std::min_element(lg2.begin(), lg2.end()); }
    double lg3_min() const { return *std::min_element(lg3.begin(), lg3.end()); }
    double lg4_max() const { return *std::max_element(lg4.begin(), lg4.end()); }
    bool lg2_violated() const { return lg2_min() < -kViolationTolerance; }
    bool lg3_violated() const { return lg3_min() < -kViolationTolerance; }
    bool lg4_violated() const { return lg4_max() > 2.0 + kViolationTolerance; }
    /// LG2 violated for the (tau, 2 tau) pair alone.
    bool lg2_violated_23() const {
        return *std::min_element(lg2.begin() + 4, lg2.begin() + 8) < -kViolationTolerance;
    }
};

/// Builds a sample from any model with moments(t1, t2) -> MomentData.
template <class Model>
LGSample lg_sample(const Model& model, double tau) {
    LGSample s;
    s.tau = tau;
    const MomentData m12 = model.moments(0.0, tau);
    const MomentData m23 = model.moments(tau, 2.0 * tau);
    const MomentData m13 = model.moments(0.0, 2.0 * tau);
    const MomentData m34 = model.moments(2.0 * tau, 3.0 * tau);
    const MomentData m14 = model.moments(0.0, 3.0 * tau);
    s.lg2 = lg2_set(m12, m23, m13);
    s.lg3 = lg3_set(m12.c12, m23.c12, m13.c12);
    s.lg4 = lg4_set(m12.c12, m23.c12, m34.c12, m14.c12);
    return s;
}

/// Sample for a stationary state with constant mean and C(tau), C(2tau), C(3tau).
inline LGSample lg_sample_stationary(double tau, double mean, double c1, double c2, double c3) {
    LGSample s;
    s.tau = tau;
    const MomentData m1 = MomentData::from_moments(0.0, tau, mean, mean, c1);
    const MomentData m2 = MomentData::from_moments(0.0, 2.0 * tau, mean, mean, c2);
    s.lg2 = lg2_set(m1, m1, m2);
    s.lg3 = lg3_set(c1, c1, c2);
    s.lg4 = lg4_set(c1, c1, c1, c3);
    return s;
}

/// Kernels over a tau scan with aggregated flags: a family is violated when
/// it is violated at one or more scanned points.
struct LGReport {
    std::vector<LGSample> samples;
    bool lg2_violated = false;
    bool lg3_violated = false;
    bool lg4_violated = false;
    bool lg2_violated_23 = false;
    double lg2_min = std::numeric_limits<double>::infinity();
    double lg3_min = std::numeric_limits<double>::infinity();
    double lg4_max = -std::numeric_limits<double>::infinity();
    double lg2_argmin = 0.0;
    double lg3_argmin = 0.0;
    double lg4_argmax = 0.0;
    Regime regime = Regime::I;
    /// min LG3 as a fraction of the Lueders bound (0 when not violated).
    double luders_fraction = 0.0;

    static LGReport from_samples(std::vector<LGSample> samples) {
        LGReport r;
        r.samples = std::move(samples);
        for (const auto& s : r.samples) {
            r.lg2_violated = r.lg2_violated || s.lg2_violated();
            r.lg3_violated = r.lg3_violated || s.lg3_violated();
            r.lg4_violated = r.lg4_violated || s.lg4_violated();
            r.lg2_violated_23 = r.lg2_violated_23 || s.lg2_violated_23();
            if (s.lg2_min() < r.lg2_min) { r.lg2_min = s.lg2_min(); r.lg2_argmin = s.tau; }
            if (s.lg3_min() < r.lg3_min) { r.lg3_min = s.lg3_min(); r.lg3_argmin = s.tau; }
            if (s.lg4_max() > r.lg4_max) { r.lg4_max = s.lg4_max(); r.lg4_argmax = s.tau; }
        }
        r.regime = regime_classify(r.lg3_violated, r.lg2_violated);
        r.luders_fraction = std::max(0.0, r.lg3_min / kLudersBound);
        return r;
    }
};

inline Regime regime_classify(const LGReport& report) {
    return regime_classify(report.lg3_violated, report.lg2_violated);
}

template <class Model>
LGReport lg_report(const Model& model, const std::vector<double>& taus, unsigned threads = 0) {
    std::vector<LGSample> samples(taus.size());
    parallel_for(taus.size(), [&](std::size_t i) { samples[i] = lg_sample(model, taus[i]); }, threads);
    return LGReport::from_samples(std::move(samples));
}

/// Moment models for the standard states.
struct SuperpositionModel {
    double theta = 0.0;
    double phi = 0.0;
    MomentData moments(double t1, double t2) const { return superposition_moments(theta, phi, t1, t2); }
};

/// Oscillator eigenstate n <= 8 through the closed forms.
struct ExactEigenstateModel {
    std::size_t n = 0;
    MomentData moments(double t1, double t2) const {
        return MomentData::from_moments(t1, t2, 0.0, 0.0, exact_qho_correlator(n, t2 - t1));
    }
};

struct SeriesModel {
    const EigenstateSeries* series = nullptr;
    MomentData moments(double t1, double t2) const { return series->moments(t1, t2); }
};

/// Column names matching the kernel orderings above.
inline std::vector<std::string> lg2_names() {
    std::vector<std::string> out;
    for (const char* pair : {"12", "23", "13"})
        for (const char* signs : {"pp", "pm", "mp", "mm"}) out.push_back(std::string("lg2_") + pair + "_" + signs);
    return out;
}

inline std::vector<std::string> lg3_names() { return {"L1", "L2", "L3", "L4"}; }

inline std::vector<std::string> lg4_names() {
    std::vector<std::string> out;
    for (int j = 1; j <= 4; ++j) out.push_back("K" + std::to_string(j));
    for (int j = 1; j <= 4; ++j) out.push_back("negK" + std::to_string(j));
    return out;
}

}  // namespace lgbound
