#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgbound/correlators.hpp"
#include "lgbound/eigensystems.hpp"
#include "lgbound/lg.hpp"
#include "lgbound/overlaps.hpp"
#include "lgbound/parallel.hpp"
#include "lgbound/region.hpp"

namespace lgbound {

/// A linear axis. count >= 2 with stop > start, or a single fixed value
/// (count == 1, start == stop).
struct Axis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;

    Axis() = default;
    Axis(std::string name_in, double start_in, double stop_in, std::size_t count_in)
        : name(std::move(name_in)), start(start_in), stop(stop_in), count(count_in) {
        if (!std::isfinite(start) || !std::isfinite(stop))
            throw std::invalid_argument("Axis " + name + ": endpoints must be finite");
        if (count == 1 && start == stop) return;
        if (count < 2) throw std::invalid_argument("Axis " + name + ": needs at least 2 points");
        if (!(stop > start)) throw std::invalid_argument("Axis " + name + ": stop must exceed start");
    }

    static Axis fixed(std::string name, double value) { return Axis(std::move(name), value, value, 1); }

    double at(std::size_t i) const {
        if (count == 1) return start;
        if (i + 1 == count) return stop;
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }

    std::vector<double> values() const {
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i) out[i] = at(i);
        return out;
    }
};

/// Log-spaced values in [start, stop].
inline std::vector<double> log_values(double start, double stop, std::size_t count) {
    if (!(start > 0.0) || !(stop > start) || count < 2)
        throw std::invalid_argument("log_values: need 0 < start < stop and count >= 2");
    std::vector<double> out(count);
    const double ls = std::log(start), le = std::log(stop);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = std::exp(ls + (le - ls) * static_cast<double>(i) / static_cast<double>(count - 1));
    out.front() = start;
    out.back() = stop;
    return out;
}

/// tau_j = 2 pi j / N, j = 0..N-1.
inline std::vector<double> periodic_taus(std::size_t n_points) {
    std::vector<double> out(n_points);
    for (std::size_t j = 0; j < n_points; ++j)
        out[j] = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_points);
    return out;
}

struct ScanRecord {
    std::vector<double> coords;
    std::vector<double> values;
    std::string label;
    bool masked = false;
};

/// Table of per-point records: coordinate columns, value columns, and an
/// optional label column; plus an ordered summary of named scalars.
struct ScanResult {
    std::vector<std::string> coord_names;
    std::vector<std::string> value_names;
    std::string label_name;
    std::vector<ScanRecord> records;
    std::vector<std::pair<std::string, double>> summary;

    double summary_value(const std::string& key) const {
        for (const auto& [k, v] : summary)
            if (k == key) return v;
        throw std::out_of_range("ScanResult: no summary entry " + key);
    }

    std::size_t value_index(const std::string& key) const {
        for (std::size_t i = 0; i < value_names.size(); ++i)
            if (value_names[i] == key) return i;
        throw std::out_of_range("ScanResult: no value column " + key);
    }

    double value(std::size_t record, const std::string& key) const { return records.at(record).values[value_index(key)]; }
};

// ---------------------------------------------------------------------------
// Superposition regime maps.

namespace detail {

struct PairCorrelators {
    double c0[4];  // C^{|0>}(k tau), k = 0..3
    double c1[4];
};

inline LGSample superposition_sample(double theta, double phi, double tau, const PairCorrelators& pc) {
    const double w0 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double w1 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    double c[4], mean[4];
    for (int k = 0; k < 4; ++k) {
        c[k] = w0 * pc.c0[k] + w1 * pc.c1[k];
        mean[k] = superposition_mean(theta, phi, k * tau);
    }
    const MomentData m12 = MomentData::from_moments(0.0, tau, mean[0], mean[1], c[1]);
    const MomentData m23 = MomentData::from_moments(tau, 2.0 * tau, mean[1], mean[2], c[1]);
    const MomentData m13 = MomentData::from_moments(0.0, 2.0 * tau, mean[0], mean[2], c[2]);
    LGSample s;
    s.tau = tau;
    s.lg2 = lg2_set(m12, m23, m13);
    s.lg3 = lg3_set(c[1], c[1], c[2]);
    s.lg4 = lg4_set(c[1], c[1], c[1], c[3]);
    return s;
}

inline std::vector<PairCorrelators> pair_correlators(const std::vector<double>& taus) {
    std::vector<PairCorrelators> out(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i)
        for (int k = 0; k < 4; ++k) {
            out[i].c0[k] = exact_qho_correlator(0, k * taus[i]);
            out[i].c1[k] = exact_qho_correlator(1, k * taus[i]);
        }
    return out;
}

}  // namespace detail

/// LG report for one superposition over a tau list.
inline LGReport superposition_report(double theta, double phi, const std::vector<double>& taus) {
    const auto pcs = detail::pair_correlators(taus);
    std::vector<LGSample> samples(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) samples[i] = detail::superposition_sample(theta, phi, taus[i], pcs[i]);
    return LGReport::from_samples(std::move(samples));
}

/// Per (theta, phi): kernel extrema over the tau axis, violation flags, and
/// the regime label.
inline ScanResult scan_superposition(const Axis& theta_axis, const Axis& phi_axis, const Axis& tau_axis,
                                     unsigned threads = 0) {
    const std::vector<double> thetas = theta_axis.values();
    const std::vector<double> phis = phi_axis.values();
    const std::vector<double> taus = tau_axis.values();
    const auto pcs = detail::pair_correlators(taus);

    ScanResult res;
    res.coord_names = {"theta", "phi"};
    res.value_names = {"lg2_min", "lg2_23_min", "lg3_min", "lg4_max",
                       "lg2_violated", "lg2_23_violated", "lg3_violated", "lg4_violated"};
    res.label_name = "regime";
    res.records.resize(thetas.size() * phis.size());
    parallel_for(res.records.size(), [&](std::size_t idx) {
        const double theta = thetas[idx / phis.size()];
        const double phi = phis[idx % phis.size()];
        double lg2_min = kInf, lg2_23 = kInf, lg3_min = kInf, lg4_max = -kInf;
        for (std::size_t i = 0; i < taus.size(); ++i) {
            const LGSample s = detail::superposition_sample(theta, phi, taus[i], pcs[i]);
            lg2_min = std::min(lg2_min, s.lg2_min());
            lg2_23 = std::min(lg2_23, *std::min_element(s.lg2.begin() + 4, s.lg2.begin() + 8));
            lg3_min = std::min(lg3_min, s.lg3_min());
            lg4_max = std::max(lg4_max, s.lg4_max());
        }
        const bool v2 = lg2_min < -kViolationTolerance;
        const bool v23 = lg2_23 < -kViolationTolerance;
        const bool v3 = lg3_min < -kViolationTolerance;
        const bool v4 = lg4_max > 2.0 + kViolationTolerance;
        auto& rec = res.records[idx];
        rec.coords = {theta, phi};
        rec.values = {lg2_min, lg2_23, lg3_min, lg4_max, double(v2), double(v23), double(v3), double(v4)};
        rec.label = to_string(regime_classify(v3, v2));
    }, threads);

    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& r : res.records) {
        for (int g = 0; g < 4; ++g)
            if (r.label == to_string(static_cast<Regime>(g))) ++counts[g];
    }
    res.summary = {{"points", double(res.records.size())},
                   {"regime_I", double(counts[0])},
                   {"regime_II", double(counts[1])},
                   {"regime_III", double(counts[2])},
                   {"regime_IV", double(counts[3])}};
    return res;
}

// ---------------------------------------------------------------------------
// Oscillator eigenstates on the periodic grid.

struct EigenstateGrid {
    std::vector<double> correlator;  // at tau_j = 2 pi j / N
    double truncation_error = 0.0;
    std::size_t cutoff = 0;
    bool exact = false;
};

/// C^{|n>} on tau_j = 2 pi j / N: closed forms for n <= 8, otherwise the
/// series with a cutoff chosen for `target`.
inline EigenstateGrid qho_eigenstate_grid(std::size_t n, std::size_t n_points, double target = 1e-4,
                                          bool force_series = false) {
    EigenstateGrid g;
    if (n <= kMaxClosedForm && !force_series) {
        g.exact = true;
        g.correlator.resize(n_points);
        const auto taus = periodic_taus(n_points);
        for (std::size_t j = 0; j < n_points; ++j) g.correlator[j] = exact_qho_correlator(n, taus[j]);
        return g;
    }
    const EigenstateSeries series = EigenstateSeries::with_target(QhoSystem{}, n, target);
    g.correlator = series.correlator_on_periodic_grid(n_points);
    g.truncation_error = series.truncation_error();
    g.cutoff = series.cutoff();
    return g;
}

/// LG samples for a stationary state from a periodic correlator grid; the
/// multiples 2 tau, 3 tau are read back from the same grid.
inline LGReport stationary_report(const std::vector<double>& grid, double mean = 0.0) {
    const std::size_t n_points = grid.size();
    const auto taus = periodic_taus(n_points);
    std::vector<LGSample> samples(n_points);
    for (std::size_t j = 0; j < n_points; ++j)
        samples[j] = lg_sample_stationary(taus[j], mean, grid[j], grid[(2 * j) % n_points], grid[(3 * j) % n_points]);
    return LGReport::from_samples(std::move(samples));
}

inline constexpr std::size_t kMaxEigenstateScan = 50;

/// Per eigenstate n = 0..n_max: minimum LG3 over the periodic tau grid, as a
/// fraction of the Lueders bound, with parity tag and LG4 maximum.
inline ScanResult scan_eigenstate_violation(std::size_t n_max, std::size_t n_points = 1024, double target = 1e-4,
                                            unsigned threads = 0) {
    if (n_max > kMaxEigenstateScan) throw std::invalid_argument("scan_eigenstate_violation: n_max must be <= 50");
    ScanResult res;
    res.coord_names = {"n"};
    res.value_names = {"odd", "lg3_min", "luders_fraction", "lg4_max", "truncation_error", "cutoff"};
    res.records.resize(n_max + 1);
    parallel_for(n_max + 1, [&](std::size_t n) {
        const EigenstateGrid g = qho_eigenstate_grid(n, n_points, target);
        const LGReport rep = stationary_report(g.correlator);
        res.records[n].coords = {double(n)};
        res.records[n].values = {double(n % 2), rep.lg3_min, rep.luders_fraction, rep.lg4_max, g.truncation_error,
                                 double(g.cutoff)};
    }, threads);
    // Odd states sit above both even neighbours.
    bool odd_above_even = true;
    for (std::size_t n = 1; n <= n_max; n += 2) {
        const double f = res.records[n].values[2];
        if (f <= res.records[n - 1].values[2]) odd_above_even = false;
        if (n + 1 <= n_max && f <= res.records[n + 1].values[2]) odd_above_even = false;
    }
    res.summary = {{"odd_above_even", double(odd_above_even)},
                   {"fraction_n1", n_max >= 1 ? res.records[1].values[2] : 0.0}};
    return res;
}

/// (1/2pi) int_0^{2pi} |C_cl - C^{|n>}| dtau on an N-point periodic grid
/// (the rectangle rule is the composite trapezoid rule for periodic data).
inline double classicalization_delta(std::size_t n, std::size_t n_points = 1024, double target = 1e-4) {
    if (n > kMaxEigenstateScan) throw std::invalid_argument("classicalization_delta: n must be <= 50");
    if (n_points < 1024) throw std::invalid_argument("classicalization_delta: need at least 1024 points");
    const EigenstateGrid g = qho_eigenstate_grid(n, n_points, target);
    const auto taus = periodic_taus(n_points);
    double total = 0.0;
    for (std::size_t j = 0; j < n_points; ++j) total += std::abs(classical_correlator(taus[j]) - g.correlator[j]);
    return total / static_cast<double>(n_points);
}

/// max_j |C_cl - C^{|n>}| on the periodic grid.
inline double classicalization_gap(std::size_t n, std::size_t n_points = 1024, double target = 1e-4) {
    const EigenstateGrid g = qho_eigenstate_grid(n, n_points, target);
    const auto taus = periodic_taus(n_points);
    double gap = 0.0;
    for (std::size_t j = 0; j < n_points; ++j) gap = std::max(gap, std::abs(classical_correlator(taus[j]) - g.correlator[j]));
    return gap;
}

inline ScanResult scan_classicalization(std::size_t n_max, std::size_t n_points = 1024, double target = 1e-4,
                                        unsigned threads = 0) {
    if (n_max > kMaxEigenstateScan) throw std::invalid_argument("scan_classicalization: n_max must be <= 50");
    ScanResult res;
    res.coord_names = {"n"};
    res.value_names = {"delta", "max_gap"};
    res.records.resize(n_max + 1);
    parallel_for(n_max + 1, [&](std::size_t n) {
        res.records[n].coords = {double(n)};
        res.records[n].values = {classicalization_delta(n, n_points, target), classicalization_gap(n, n_points, target)};
    }, threads);
    res.summary = {{"delta_first", res.records.front().values[0]}, {"delta_last", res.records.back().values[0]}};
    return res;
}

// ---------------------------------------------------------------------------
// Region scans.

/// Quasi-probability q(+,+) for |n>, first projector on region1, second on
/// [c, d], factorized so each endpoint costs one row evaluation:
/// q = J_nn(R1) J_nn(c, d) + S(d) - S(c), with
/// S(x) = sum_{k != n} cos(dE_k tau) J_nk(R1) W_nk(x) / (2 (eps_k - eps_n)).
class RegionScanner {
public:
    RegionScanner(const BoundSystem& sys, std::size_t n, Region region1, double tau, std::size_t m)
        : sys_(sys), n_(n), m_(clamp_cutoff(sys, m)), tau_(tau) {
        row1_ = overlap_row(sys, n, region1, m_);
        diag1_ = n < row1_.size() ? row1_[n] : region_diagonal(sys, n, region1);
        const double en = sys.energy(n);
        coef_.assign(m_ + 1, 0.0);
        for (std::size_t k = 0; k <= m_; ++k) {
            if (k == n) continue;
            const double gap = sys.energy(k) - en;
            coef_[k] = std::cos(gap * sys.phase_rate() * tau) * row1_[k] / (2.0 * gap);
        }
        truncation1_ = truncation_error_from_row(row1_, diag1_);
    }

    std::size_t cutoff() const { return m_; }
    double truncation_error() const { return truncation1_; }

    /// S(x); zero at infinite x.
    double partial(double x) const {
        if (std::isinf(x)) return 0.0;
        const std::size_t width = std::max(m_, n_) + 1;
        std::vector<double> psi(width), dpsi(width);
        sys_.fill_rows(x, psi, dpsi);
        double total = 0.0;
        for (std::size_t k = 0; k <= m_; ++k) total += coef_[k] * (dpsi[n_] * psi[k] - dpsi[k] * psi[n_]);
        return total;
    }

    /// int_{-inf}^{x} psi_n^2.
    double cumulative(double x) const { return diagonal_overlap(sys_, n_, -kInf, x); }

    double quasiprob(double c, double d) const {
        return diag1_ * (cumulative(d) - cumulative(c)) + partial(d) - partial(c);
    }

    double diag1() const { return diag1_; }

private:
    const BoundSystem& sys_;
    std::size_t n_;
    std::size_t m_;
    double tau_;
    std::vector<double> row1_;
    std::vector<double> coef_;
    double diag1_ = 0.0;
    double truncation1_ = 0.0;
};

/// q(+,+) on a (c, d) grid with the first region fixed at [0, inf) and the
/// second at [c, d]; points with c >= d are masked.
inline ScanResult scan_region(const Axis& c_axis, const Axis& d_axis, double tau, std::size_t n = 0,
                              double target = 1e-4, unsigned threads = 0) {
    const QhoSystem qho;
    const Region first = Region::positive_half();
    const Cutoff cut = choose_cutoff(qho, n, first, target);
    const RegionScanner scanner(qho, n, first, tau, cut.m);

    const std::vector<double> cs = c_axis.values();
    const std::vector<double> ds = d_axis.values();
    std::vector<double> sc(cs.size()), sd(ds.size()), fc(cs.size()), fd(ds.size());
    parallel_for(cs.size(), [&](std::size_t i) { sc[i] = scanner.partial(cs[i]); fc[i] = scanner.cumulative(cs[i]); }, threads);
    parallel_for(ds.size(), [&](std::size_t i) { sd[i] = scanner.partial(ds[i]); fd[i] = scanner.cumulative(ds[i]); }, threads);

    ScanResult res;
    res.coord_names = {"c", "d"};
    res.value_names = {"q"};
    res.records.reserve(cs.size() * ds.size());
    double best = kInf, best_c = 0.0, best_d = 0.0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < ds.size(); ++j) {
            ScanRecord rec;
            rec.coords = {cs[i], ds[j]};
            if (!(cs[i] < ds[j])) {
                rec.masked = true;
                rec.values = {std::numeric_limits<double>::quiet_NaN()};
            } else {
                const double q = scanner.diag1() * (fd[j] - fc[i]) + sd[j] - sc[i];
                rec.values = {q};
                if (q < best) { best = q; best_c = cs[i]; best_d = ds[j]; }
            }
            res.records.push_back(std::move(rec));
        }
    }
    res.summary = {{"q_min", best}, {"c_argmin", best_c}, {"d_argmin", best_d}, {"tau", tau},
                   {"cutoff", double(scanner.cutoff())}, {"truncation_error", scanner.truncation_error()}};
    return res;
}

/// Same with the second region a half-line [c, inf).
inline ScanResult scan_region_half_line(const Axis& c_axis, double tau, std::size_t n = 0, double target = 1e-4,
                                        unsigned threads = 0) {
    const QhoSystem qho;
    const Region first = Region::positive_half();
    const Cutoff cut = choose_cutoff(qho, n, first, target);
    const RegionScanner scanner(qho, n, first, tau, cut.m);
    const std::vector<double> cs = c_axis.values();
    ScanResult res;
    res.coord_names = {"c"};
    res.value_names = {"q"};
    res.records.resize(cs.size());
    parallel_for(cs.size(), [&](std::size_t i) {
        const double q = scanner.diag1() * (1.0 - scanner.cumulative(cs[i])) - scanner.partial(cs[i]);
        res.records[i].coords = {cs[i]};
        res.records[i].values = {q};
    }, threads);
    double best = kInf, best_c = 0.0;
    for (const auto& r : res.records)
        if (r.values[0] < best) { best = r.values[0]; best_c = r.coords[0]; }
    res.summary = {{"q_min", best}, {"c_argmin", best_c}, {"tau", tau}};
    return res;
}

// ---------------------------------------------------------------------------
// Smoothed projectors.

/// Series cutoff used for smoothed-projector rows; the sharp truncation
/// error of |1> at this cutoff is below 1e-6.
inline constexpr std::size_t kSmoothingCutoff = 2000;

/// Minimum LG3 of |n> with the smoothed projector of width a, over the
/// periodic tau grid.
inline double smoothed_lg3_min(double a, std::size_t n = 1, std::size_t n_points = 512,
                               std::size_t m = kSmoothingCutoff) {
    const EigenstateSeries series = EigenstateSeries::smoothed(n, a, m);
    return stationary_report(series.correlator_on_periodic_grid(n_points)).lg3_min;
}

inline ScanResult scan_smoothing(const std::vector<double>& widths, std::size_t n = 1, std::size_t n_points = 512,
                                 std::size_t m = kSmoothingCutoff, unsigned threads = 0) {
    for (double a : widths)
        if (!(a > 0.0)) throw std::invalid_argument("scan_smoothing: widths must be positive");
    ScanResult res;
    res.coord_names = {"a"};
    res.value_names = {"lg3_min"};
    res.records.resize(widths.size());
    parallel_for(widths.size(), [&](std::size_t i) {
        res.records[i].coords = {widths[i]};
        res.records[i].values = {smoothed_lg3_min(widths[i], n, n_points, m)};
    }, threads);
    double lowest = kInf;
    for (const auto& r : res.records) lowest = std::min(lowest, r.values[0]);
    res.summary = {{"lg3_min", lowest}};
    return res;
}

// ---------------------------------------------------------------------------
// Morse.

struct MorseTrace {
    LGReport report;
    std::vector<double> taus;
    std::vector<double> correlator;
    double mean = 0.0;
    double truncation_error = 0.0;
    bool truncation_warning = false;
    std::size_t cutoff = 0;
};

/// Correlator and LG kernels for Morse eigenstate n over omega0 tau, split at
/// the well minimum, using every bound state.
inline MorseTrace scan_morse(double lambda, std::size_t n, const std::vector<double>& taus, unsigned threads = 0) {
    const MorseSystem morse(lambda);
    morse.check_state(n);
    const EigenstateSeries series(morse, n, *morse.num_states() - 1,
                                  Region::interval(morse.well_minimum(), kInf));
    MorseTrace out;
    out.taus = taus;
    out.mean = series.mean();
    out.truncation_error = series.truncation_error();
    out.truncation_warning = series.truncation_warning();
    out.cutoff = series.cutoff();
    out.correlator.resize(taus.size());
    std::vector<LGSample> samples(taus.size());
    parallel_for(taus.size(), [&](std::size_t i) {
        const double t = taus[i];
        out.correlator[i] = series.correlator(t);
        samples[i] = lg_sample_stationary(t, series.mean(), out.correlator[i], series.correlator(2.0 * t),
                                          series.correlator(3.0 * t));
    }, threads);
    out.report = LGReport::from_samples(std::move(samples));
    return out;
}

}  // namespace lgbound
