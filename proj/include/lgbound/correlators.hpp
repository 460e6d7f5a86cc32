#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lgbound/eigensystems.hpp"
#include "lgbound/overlaps.hpp"
#include "lgbound/region.hpp"

namespace lgbound {

/// <0| sgn(x) |1> for the oscillator.
inline const double kSignOffDiagonal = std::sqrt(2.0 / kPi);

/// Truncation errors above this raise the series warning flag.
inline constexpr double kTruncationWarning = 1e-2;

/// Two-time data for one pair of measurement times: single-time averages,
/// the correlator, and the quasi-probabilities q(s1, s2) rebuilt from them.
struct MomentData {
    double t1 = 0.0;
    double t2 = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double c12 = 0.0;
    /// q(+,+), q(+,-), q(-,+), q(-,-).
    std::array<double, 4> q_table{};

    static MomentData from_moments(double t1, double t2, double q1, double q2, double c12) {
        MomentData m{t1, t2, q1, q2, c12, {}};
        for (int i = 0; i < 4; ++i) m.q_table[i] = quasiprob(i, q1, q2, c12);
        return m;
    }

    double q(int s1, int s2) const { return q_table[index(s1, s2)]; }

    static constexpr int sign1(int i) { return i < 2 ? 1 : -1; }
    static constexpr int sign2(int i) { return i % 2 == 0 ? 1 : -1; }
    static int index(int s1, int s2) {
        if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1))
            throw std::invalid_argument("MomentData: signs must be +1 or -1");
        return (s1 == 1 ? 0 : 2) + (s2 == 1 ? 0 : 1);
    }

private:
    static double quasiprob(int i, double q1, double q2, double c12) {
        const double s1 = sign1(i), s2 = sign2(i);
        return 0.25 * (1.0 + s1 * q1 + s2 * q2 + s1 * s2 * c12);
    }
};

/// A real cosine series sum_k w_k cos(f_k tau). When every frequency is an
/// integer (f_k = k + offset) it can also be folded onto periodic grids.
class SpectralSeries {
public:
    SpectralSeries(std::vector<double> weights, std::vector<double> frequencies)
        : weights_(std::move(weights)), frequencies_(std::move(frequencies)) {
        if (weights_.size() != frequencies_.size())
            throw std::invalid_argument("SpectralSeries: weight/frequency size mismatch");
    }

    static SpectralSeries integer(std::vector<double> weights, long offset) {
        std::vector<double> freq(weights.size());
        for (std::size_t k = 0; k < freq.size(); ++k) freq[k] = static_cast<double>(static_cast<long>(k) + offset);
        SpectralSeries s(std::move(weights), std::move(freq));
        s.integer_ = true;
        s.offset_ = offset;
        return s;
    }

    bool integer_frequencies() const { return integer_; }
    std::size_t size() const { return weights_.size(); }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& frequencies() const { return frequencies_; }

    double operator()(double tau) const {
        if (!integer_) {
            double total = 0.0;
            for (std::size_t k = 0; k < weights_.size(); ++k) total += weights_[k] * std::cos(frequencies_[k] * tau);
            return total;
        }
        // Phase rotation e^{i(k+offset)tau}, re-seeded every block to bound
        // the accumulated rounding.
        constexpr std::size_t kBlock = 1024;
        const std::complex<double> step = std::polar(1.0, tau);
        double total = 0.0;
        for (std::size_t start = 0; start < weights_.size(); start += kBlock) {
            std::complex<double> phase = std::polar(1.0, frequencies_[start] * tau);
            const std::size_t stop = std::min(weights_.size(), start + kBlock);
            for (std::size_t k = start; k < stop; ++k) {
                total += weights_[k] * phase.real();
                phase *= step;
            }
        }
        return total;
    }

    /// Values at tau_j = 2 pi j / N, j = 0..N-1, exact for integer
    /// frequencies: weights are folded by frequency mod N, then a real DFT.
    std::vector<double> on_periodic_grid(std::size_t n_points) const {
        if (!integer_) throw std::logic_error("SpectralSeries: periodic folding needs integer frequencies");
        if (n_points == 0) throw std::invalid_argument("SpectralSeries: empty grid");
        const long big_n = static_cast<long>(n_points);
        std::vector<double> bins(n_points, 0.0);
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            long r = (static_cast<long>(k) + offset_) % big_n;
            if (r < 0) r += big_n;
            bins[static_cast<std::size_t>(r)] += weights_[k];
        }
        std::vector<double> cos_table(n_points);
        for (std::size_t r = 0; r < n_points; ++r)
            cos_table[r] = std::cos(2.0 * kPi * static_cast<double>(r) / static_cast<double>(n_points));
        std::vector<double> out(n_points, 0.0);
        for (std::size_t j = 0; j < n_points; ++j) {
            double total = 0.0;
            for (std::size_t r = 0; r < n_points; ++r) total += bins[r] * cos_table[(r * j) % n_points];
            out[j] = total;
        }
        return out;
    }

private:
    std::vector<double> weights_;
    std::vector<double> frequencies_;
    bool integer_ = false;
    long offset_ = 0;
};

/// Truncated eigenbasis series for an energy eigenstate |n> with the
/// dichotomic split "x in region" (default: right of the origin / well
/// minimum). q(+,+)(tau) = sum_k J_nk^2 cos((eps_k - eps_n) tau).
class EigenstateSeries {
public:
    EigenstateSeries(const BoundSystem& sys, std::size_t n, std::size_t m_max,
                     const Region& region = Region::positive_half())
        : n_(n) {
        sys.check_state(n);
        if (m_max < n && !sys.num_states()) throw std::invalid_argument("EigenstateSeries: m_max must be >= n");
        const std::vector<double> row = overlap_row(sys, n, region, m_max);
        const double diag = region_diagonal(sys, n, region);
        truncation_error_ = truncation_error_from_row(row, diag);
        mean_ = 2.0 * diag - 1.0;
        if (sys.is_symmetric() && region == Region::positive_half()) mean_ = 0.0;
        build(sys, row, row);
    }

    /// Cutoff picked so the truncation error meets `target` (or the cap).
    static EigenstateSeries with_target(const BoundSystem& sys, std::size_t n,
                                        double target = kDefaultTruncationTarget, std::size_t cap = 0,
                                        const Region& region = Region::positive_half()) {
        const Cutoff cut = choose_cutoff(sys, n, region, target, cap);
        return EigenstateSeries(sys, n, cut.m, region);
    }

    /// Oscillator state |n> with the smoothed projector (1 + erf(x/a))/2.
    /// The reported truncation error is the sharp-projector value, an upper
    /// bound for the faster-decaying smoothed row.
    static EigenstateSeries smoothed(std::size_t n, double a, std::size_t m_max) {
        const QhoSystem qho;
        const std::vector<double> row = smoothed_overlap_row(n, a, m_max);
        EigenstateSeries s;
        s.n_ = n;
        s.mean_ = 0.0;
        s.truncation_error_ = lgbound::truncation_error(qho, n, m_max, Region::positive_half());
        s.build(qho, row, row);
        return s;
    }

    std::size_t state() const { return n_; }
    std::size_t cutoff() const { return series_.size() - 1; }
    double truncation_error() const { return truncation_error_; }
    bool truncation_warning() const { return truncation_error_ > kTruncationWarning; }
    const SpectralSeries& series() const { return series_; }

    /// Single-time average <Q>, time independent for an eigenstate.
    double mean() const { return mean_; }
    double quasiprob(double tau) const { return series_(tau); }
    double correlator(double tau) const { return 4.0 * series_(tau) - 1.0 - 2.0 * mean_; }

    MomentData moments(double t1, double t2) const {
        return MomentData::from_moments(t1, t2, mean_, mean_, correlator(t2 - t1));
    }

    /// Correlator at tau_j = 2 pi j / N (integer-gap systems only).
    std::vector<double> correlator_on_periodic_grid(std::size_t n_points) const {
        std::vector<double> q = series_.on_periodic_grid(n_points);
        for (double& v : q) v = 4.0 * v - 1.0 - 2.0 * mean_;
        return q;
    }

private:
    EigenstateSeries() = default;

    void build(const BoundSystem& sys, const std::vector<double>& row1, const std::vector<double>& row2) {
        std::vector<double> weights(row1.size());
        for (std::size_t k = 0; k < row1.size(); ++k) weights[k] = row1[k] * row2[k];
        if (sys.integer_gaps()) {
            series_ = SpectralSeries::integer(std::move(weights), -static_cast<long>(n_));
            return;
        }
        std::vector<double> freq(row1.size());
        const double en = sys.energy(n_);
        for (std::size_t k = 0; k < row1.size(); ++k) freq[k] = (sys.energy(k) - en) * sys.phase_rate();
        series_ = SpectralSeries(std::move(weights), std::move(freq));
    }

    std::size_t n_ = 0;
    double mean_ = 0.0;
    double truncation_error_ = 0.0;
    SpectralSeries series_{{}, {}};
};

/// Moment data for |n> at times (0, tau) from the truncated series.
inline MomentData series_quasiprob(const BoundSystem& sys, std::size_t n, double tau, std::size_t m_max) {
    return EigenstateSeries(sys, n, m_max).moments(0.0, tau);
}

namespace detail {

struct ClosedForm {
    double denominator;
    std::vector<double> numerators;  // coefficients of e^{-2 i k tau}, k = 0, 1, ...
};

inline const std::array<ClosedForm, 9>& qho_closed_forms() {
    static const std::array<ClosedForm, 9> table = {{
        {1.0, {}},
        {1.0, {1.0}},
        {2.0, {1.0}},
        {6.0, {5.0, 1.0}},
        {24.0, {14.0, 1.0}},
        {120.0, {94.0, 17.0, 9.0}},
        {240.0, {148.0, 14.0, 3.0}},
        {1680.0, {1276.0, 218.0, 111.0, 75.0}},
        {13440.0, {8528.0, 904.0, 258.0, 75.0}},
    }};
    return table;
}

}  // namespace detail

/// Largest eigenstate index with a closed-form oscillator correlator.
inline constexpr std::size_t kMaxClosedForm = 8;

/// Exact oscillator correlator for |n>, n <= 8:
/// (2/pi) Re[ arctan(1/f) + P_n(e^{-2 i tau}) f ],
/// f(tau) = -i e^{-i tau/2} sqrt(2 i sin tau), principal branches.
/// At sin tau = 0 the removable singularities take their limits +1 / -1.
inline double exact_qho_correlator(std::size_t n, double tau) {
    if (n > kMaxClosedForm)
        throw std::out_of_range("exact_qho_correlator: closed forms exist for n <= 8; use EigenstateSeries");
    double t = std::fmod(tau, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    if (t == 0.0) return 1.0;
    if (t == kPi) return -1.0;

    using cd = std::complex<double>;
    const cd i(0.0, 1.0);
    const cd f = -i * std::polar(1.0, -0.5 * t) * std::sqrt(cd(0.0, 2.0 * std::sin(t)));
    const auto& form = detail::qho_closed_forms()[n];
    cd poly = 0.0;
    const cd step = std::polar(1.0, -2.0 * t);
    cd power = 1.0;
    for (double c : form.numerators) {
        poly += c * power;
        power *= step;
    }
    poly /= form.denominator;
    return (2.0 / kPi) * (std::atan(1.0 / f) + poly * f).real();
}

/// The three-term series value (3/pi) cos tau for |1>.
inline double three_term_correlator(double tau) { return 3.0 / kPi * std::cos(tau); }

/// Classical analogue: -1 + (2/pi)|pi - (tau mod 2pi)|, a triangle wave.
inline double classical_correlator(double tau) {
    double t = std::fmod(tau, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return -1.0 + 2.0 / kPi * std::abs(kPi - t);
}

/// Partial Fourier sum of the triangle wave, (8/pi^2) sum_{odd j<2K} cos(j tau)/j^2.
inline double triangle_wave_partial_sum(double tau, std::size_t terms) {
    double total = 0.0;
    for (std::size_t i = 0; i < terms; ++i) {
        const double j = 2.0 * static_cast<double>(i) + 1.0;
        total += std::cos(j * tau) / (j * j);
    }
    return 8.0 / (kPi * kPi) * total;
}

/// Correlator of cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>: the parity
/// mixture of the two eigenstate correlators.
inline double superposition_correlator(double theta, double c0, double c1) {
    const double w0 = std::cos(0.5 * theta);
    const double w1 = std::sin(0.5 * theta);
    return w0 * w0 * c0 + w1 * w1 * c1;
}

/// <Q(t)> = sqrt(2/pi) sin(theta) cos(phi + t) for the two-state oscillator.
inline double superposition_mean(double theta, double phi, double t) {
    return kSignOffDiagonal * std::sin(theta) * std::cos(phi + t);
}

inline MomentData superposition_moments(double theta, double phi, double t1, double t2) {
    const double tau = t2 - t1;
    const double c = superposition_correlator(theta, exact_qho_correlator(0, tau), exact_qho_correlator(1, tau));
    return MomentData::from_moments(t1, t2, superposition_mean(theta, phi, t1),
                                    superposition_mean(theta, phi, t2), c);
}

inline MomentData superposition_moments(const SuperpositionState& state, double t1, double t2) {
    return superposition_moments(state.theta, state.phi, t1, t2);
}

/// Re <n| E2(+)(tau) E1(+)(0) |n> for projectors onto two regions:
/// sum_k cos((eps_k - eps_n) tau) J_nk(region1) J_nk(region2).
inline double region_quasiprob(const BoundSystem& sys, std::size_t n, const Region& region1,
                               const Region& region2, double tau, std::size_t m_max) {
    sys.check_state(n);
    const std::vector<double> row1 = overlap_row(sys, n, region1, m_max);
    const std::vector<double> row2 = region1 == region2 ? row1 : overlap_row(sys, n, region2, m_max);
    const double en = sys.energy(n);
    double total = 0.0;
    for (std::size_t k = 0; k < row1.size(); ++k)
        total += row1[k] * row2[k] * std::cos((sys.energy(k) - en) * sys.phase_rate() * tau);
    return total;
}

}  // namespace lgbound
