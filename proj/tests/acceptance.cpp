// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lgbound/lgbound.hpp"
#include "oracles.hpp"

using namespace lgbound;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

Outcome ac1() {
    const QhoSystem qho;
    double worst = 0.0;
    for (double tau : Axis("tau", 0.0, 2.0 * kPi, 64).values()) {
        const double q = series_quasiprob(qho, 1, tau, 2).q(1, 1);
        worst = std::max(worst, std::abs(q - (0.25 + 3.0 / (4.0 * kPi) * std::cos(tau))));
    }
    return {worst < 1e-12, fmt("max |q - 1/4 - 3cos(tau)/(4pi)| = %.3e (tol 1e-12)", worst)};
}

Outcome ac2() {
    const QhoSystem qho;
    const double d2 = truncation_error(qho, 1, 2, Region::positive_half());
    const double d4 = truncation_error(qho, 1, 4, Region::positive_half());
    const bool ok = std::abs(d2 - 0.011) <= 1e-3 && std::abs(d4 - 0.005) <= 1e-3;
    return {ok, fmt("Delta_1(2) = %.5f (0.011 +- 0.001), Delta_1(4) = %.5f (0.005 +- 0.001)", d2, d4)};
}

Outcome ac3() {
    const QhoSystem qho;
    const Region r = Region::positive_half();
    const double expect[] = {1.0 / (2.0 * kPi), 0.0, 1.0 / (4.0 * kPi), 0.0, 1.0 / (48.0 * kPi)};
    double worst = 0.0;
    for (std::size_t k : {0u, 2u, 3u, 4u}) {
        const double j = region_overlap(qho, 1, k, r);
        worst = std::max(worst, std::abs(j * j - expect[k]));
    }
    return {worst < 1e-10, fmt("max |J_1k^2 - golden| over k = 0,2,3,4: %.3e (tol 1e-10)", worst)};
}

Outcome ac4() {
    const QhoSystem qho;
    const auto taus = periodic_taus(256);
    double worst = 0.0, worst_delta = 0.0;
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto s = EigenstateSeries::with_target(qho, n, 1e-4);
        worst_delta = std::max(worst_delta, s.truncation_error());
        const auto grid = s.correlator_on_periodic_grid(256);
        std::vector<double> exact(taus.size());
        for (std::size_t j = 0; j < taus.size(); ++j) exact[j] = exact_qho_correlator(n, taus[j]);
        worst = std::max(worst, max_abs_diff(grid, exact));
    }
    const bool ok = worst_delta < 1e-4 && worst <= 0.01;
    return {ok, fmt("max Delta_n = %.2e (< 1e-4), max |series - exact| = %.3e (tol 0.01)", worst_delta, worst)};
}

Outcome ac5() {
    double worst = 0.0;
    for (std::size_t n = 0; n <= 8; ++n) worst = std::max(worst, std::abs(exact_qho_correlator(n, kPi) + 1.0));
    for (double theta : Axis("theta", 0.0, kPi, 37).values())
        for (double phi : Axis("phi", 0.0, 2.0 * kPi, 13).values())
            for (double t1 : {0.0, 0.4, 2.2})
                worst = std::max(worst, std::abs(superposition_moments(theta, phi, t1, t1 + kPi).c12 + 1.0));
    return {worst <= 1e-6, fmt("max |C(pi) + 1| = %.3e (tol 1e-6)", worst)};
}

Outcome ac6() {
    const auto taus = Axis("tau", 0.0, 2.0 * kPi, 4096).values();
    const LGReport r1 = lg_report(ExactEigenstateModel{1}, taus);
    const LGReport r0 = lg_report(ExactEigenstateModel{0}, taus);
    const bool ok = std::abs(r1.lg3_min + 0.365) <= 0.010 && r0.lg3_min >= -1e-9;
    return {ok, fmt("|1>: min L = %.5f (-0.365 +- 0.010, %.1f%% of Lueders); |0>: min L = %.3e (>= -1e-9)",
                    r1.lg3_min, 100.0 * r1.luders_fraction, r0.lg3_min)};
}

Outcome ac7() {
    const auto taus = Axis("tau", 0.0, 2.0 * kPi, 4096).values();
    const LGReport r1 = lg_report(ExactEigenstateModel{1}, taus);
    const LGReport r0 = lg_report(ExactEigenstateModel{0}, taus);
    const bool ok = std::abs(r1.lg4_max - 2.615) <= 0.010 && r0.lg4_max <= 2.0 + 1e-9;
    return {ok, fmt("|1>: max K = %.5f (2.615 +- 0.010); |0>: max K = %.6f (<= 2 + 1e-9)", r1.lg4_max, r0.lg4_max)};
}

Outcome ac8() {
    // <0| sgn x |1> = <0| 2P_+ - 1 |1> = 2 J_01(x > 0).
    const double v = 2.0 * region_overlap(QhoSystem{}, 0, 1, Region::positive_half());
    const double err = std::abs(v - std::sqrt(2.0 / kPi));
    return {err < 1e-10, fmt("<0|sgn x|1> = %.15f, |diff| = %.3e (tol 1e-10)", v, err)};
}

Outcome ac9() {
    const Axis tau("tau", 0.0, 2.0 * kPi, 512);
    const ScanResult full = scan_superposition(Axis("theta", 0.0, kPi, 181), Axis("phi", 0.0, 2.0 * kPi, 361), tau);
    bool all = true;
    for (const char* g : {"I", "II", "III", "IV"})
        all = all && std::any_of(full.records.begin(), full.records.end(), [&](const auto& r) { return r.label == g; });
    const std::size_t n_phi = 361;
    bool edges = true;
    for (std::size_t j = 0; j < n_phi; ++j)
        edges = edges && full.records[j].label == "I" && full.records[180 * n_phi + j].label == "II";
    const ScanResult slice = scan_superposition(Axis("theta", 0.0, kPi, 181), Axis::fixed("phi", kPi), tau);
    double lo = kInf, hi = -kInf;
    bool lg2_23 = true;
    for (const auto& r : slice.records)
        if (r.label == "III") {
            lo = std::min(lo, r.coords[0]);
            hi = std::max(hi, r.coords[0]);
            lg2_23 = lg2_23 && r.values[slice.value_index("lg2_23_violated")] != 0.0;
        }
    const bool interval = lo < hi && lg2_23;
    return {all && edges && interval,
            fmt("all four regimes: %s; theta=0 -> I and theta=pi -> II: %s; phi=pi regime III on theta in [%.3f, %.3f]",
                all ? "yes" : "no", edges ? "yes" : "no", lo, hi)};
}

Outcome ac10() {
    const ScanResult r = scan_region(Axis("c", -3.0, 5.0, 201), Axis("d", -3.0, 5.0, 201), 2.77, 0, 1e-3);
    const double q = r.summary_value("q_min");
    return {q <= -0.02, fmt("min q(+,+) = %.5f at c = %.2f, d = %.2f (<= -0.02; %.0f%% of -0.125)", q,
                            r.summary_value("c_argmin"), r.summary_value("d_argmin"), 100.0 * q / -0.125)};
}

Outcome ac11() {
    const double sharp = stationary_report(qho_eigenstate_grid(1, 512).correlator).lg3_min;
    const double narrow = smoothed_lg3_min(1e-3);
    const double wide = smoothed_lg3_min(1.0);
    const bool ok = std::abs(narrow - sharp) <= 1e-3 && wide >= -1e-3;
    return {ok, fmt("a=1e-3: %.5f vs sharp %.5f (tol 1e-3); a=1: %.5f (>= -1e-3)", narrow, sharp, wide)};
}

Outcome ac12() {
    const ScanResult r = scan_classicalization(50);
    std::vector<double> d;
    for (const auto& rec : r.records) d.push_back(rec.values[0]);
    // Trend: decade averages over n = 1..50 strictly decrease.
    bool trend = true;
    double prev = kInf;
    for (std::size_t b = 0; b < 5; ++b) {
        double avg = 0.0;
        for (std::size_t n = 1 + 10 * b; n <= 10 * (b + 1); ++n) avg += d[n] / 10.0;
        trend = trend && avg < prev;
        prev = avg;
    }
    const double gap = classicalization_gap(50);
    const bool ok = trend && d[50] < d[2] / 3.0 && gap < 0.05;
    return {ok, fmt("Delta(2) = %.3e, Delta(50) = %.3e (< Delta(2)/3), decreasing trend: %s, max gap n=50: %.4f (< 0.05)",
                    d[2], d[50], trend ? "yes" : "no", gap)};
}

Outcome ac13() {
    const ParityMinimum m = parity_min();
    const bool ok = std::abs(m.value + 0.3024) <= 1e-3 && std::abs(m.ratio - std::sqrt(2.0 / kPi)) <= 1e-4;
    return {ok, fmt("min = %.6f (-0.3024 +- 1e-3) at q/sigma = %.8f (sqrt(2/pi) +- 1e-4)", m.value, m.ratio)};
}

Outcome ac14() {
    const MorseTrace t = scan_morse(50.0, 1, Axis("tau", 0.0, 2.0 * kPi, 1024).values());
    const double c_min = *std::min_element(t.correlator.begin(), t.correlator.end());
    const bool ok = std::abs(t.truncation_error - 0.001) <= 5e-4 && std::abs(t.report.lg3_min + 0.35) <= 0.02 &&
                    std::abs(t.report.lg4_max - 2.60) <= 0.05 && c_min > -1.0;
    return {ok, fmt("Delta = %.5f (0.001 +- 5e-4), min L = %.4f (-0.35 +- 0.02), max K = %.4f (2.60 +- 0.05), "
                    "min C = %.4f (> -1)",
                    t.truncation_error, t.report.lg3_min, t.report.lg4_max, c_min)};
}

Outcome ac15() {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::string> failed;
    auto check = [&](const char* name, bool ok) {
        if (!ok) failed.emplace_back(name);
    };
    const QhoSystem qho;

    // Moment expansion: q(s1,s2) = (1 + s1<Q1> + s2<Q2> + s1 s2 C)/4 reproduces the direct series sum.
    {
        bool ok = true;
        const EigenstateSeries s(qho, 3, 400);
        for (int i = 0; i < 20; ++i) {
            const double tau = 2.0 * kPi * u(rng);
            const MomentData m = s.moments(0.0, tau);
            ok = ok && std::abs(m.q(1, 1) - s.quasiprob(tau)) < 1e-12;
            double total = 0.0;
            for (double q : m.q_table) total += q;
            ok = ok && std::abs(total - 1.0) < 1e-12;
            const double sp = superposition_moments(u(rng) * kPi, u(rng) * 2.0 * kPi, tau, 2.0 * tau).c12;
            ok = ok && std::abs(sp) <= 1.0 + 1e-12;
        }
        check("moment-expansion", ok);
    }
    // Sum of LG3 kernels.
    {
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            const auto l = lg3_set(2 * u(rng) - 1, 2 * u(rng) - 1, 2 * u(rng) - 1);
            ok = ok && std::abs(l[0] + l[1] + l[2] + l[3] - 4.0) < 1e-12;
        }
        check("lg3-sum", ok);
    }
    // L_i(theta) = cos^2(theta/2) L_i^|0> + sin^2(theta/2) L_i^|1>.
    {
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            const double theta = kPi * u(rng), phi = 2.0 * kPi * u(rng), tau = 2.0 * kPi * u(rng);
            const auto s = lg_sample(SuperpositionModel{theta, phi}, tau);
            const auto s0 = lg_sample(ExactEigenstateModel{0}, tau);
            const auto s1 = lg_sample(ExactEigenstateModel{1}, tau);
            const double w0 = std::pow(std::cos(theta / 2), 2), w1 = 1.0 - w0;
            for (int k = 0; k < 4; ++k) ok = ok && std::abs(s.lg3[k] - (w0 * s0.lg3[k] + w1 * s1.lg3[k])) < 1e-10;
        }
        check("convexity", ok);
    }
    // Wronskian overlaps against independent Simpson quadrature of the explicit eigenfunctions.
    {
        bool ok = true;
        for (std::size_t k = 0; k <= 6; ++k)
            for (std::size_t l = k + 1; l <= 7; ++l)
                for (auto [a, b] : {std::pair{0.0, 12.0}, std::pair{-1.3, 0.7}, std::pair{0.4, 2.9}}) {
                    const double ref = oracle::simpson([&](double x) { return oracle::qho_psi(k, x) * oracle::qho_psi(l, x); }, a, b);
                    const double bb = b == 12.0 ? kInf : b;
                    ok = ok && std::abs(wronskian_overlap(qho, k, l, a, bb) - ref) < 1e-10;
                }
        const MorseSystem morse(50.0);
        for (std::size_t k = 0; k <= 3; ++k) {
            const double ref = oracle::simpson([&](double r) { return morse.psi(k, r) * morse.psi(k + 2, r); }, 0.0, 3.0, 200000);
            ok = ok && std::abs(wronskian_overlap(morse, k, k + 2, 0.0, 3.0) - ref) < 1e-8;
        }
        check("wronskian-vs-quadrature", ok);
    }
    // Orthonormality of the explicit and library eigenfunctions.
    {
        bool ok = true;
        for (std::size_t k = 0; k <= 10; ++k)
            for (std::size_t l = k; l <= 10; ++l) {
                const double v = oracle::simpson([&](double x) { return qho.psi(k, x) * qho.psi(l, x); }, -14.0, 14.0);
                ok = ok && std::abs(v - (k == l ? 1.0 : 0.0)) < 1e-10;
            }
        const MorseSystem morse(50.0);
        for (std::size_t k : {0u, 1u, 10u, 30u}) {
            const auto [lo, hi] = morse.support(k);
            const double v = oracle::simpson([&](double r) { return morse.psi(k, r) * morse.psi(k, r); }, lo, hi, 400000);
            ok = ok && std::abs(v - 1.0) < 1e-8;
        }
        check("orthonormality", ok);
    }
    std::string detail = failed.empty() ? "5/5 invariant suites green" : "failed:";
    for (const auto& f : failed) detail += " " + f;
    return {failed.empty(), detail};
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria = {ac1, ac2,  ac3,  ac4,  ac5,  ac6,  ac7, ac8,
                                                            ac9, ac10, ac11, ac12, ac13, ac14, ac15};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("AC%zu %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
