#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lgbound/correlators.hpp"
#include "lgbound/eigensystems.hpp"
#include "lgbound/lg.hpp"
#include "lgbound/parity.hpp"
#include "lgbound/quadrature.hpp"
#include "lgbound/scans.hpp"

namespace lgbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {
        "correlator", "lg", "scan-superposition", "scan-eigenstates", "scan-region",
        "scan-smoothing", "classicalization", "parity", "morse-lg"};
    return names;
}

struct RunConfig {
    std::string command;
    std::string system = "qho";
    double lambda = 50.0;
    /// eigenstate | superposition | gaussian
    std::string state = "eigenstate";
    std::size_t n = 0;
    double theta = 0.0;
    double phi = 0.0;
    double q = 0.0;
    double sigma = 1.0;

    double tau_min = 0.0;
    double tau_max = 2.0 * kPi;
    std::size_t tau_count = 512;

    double theta_min = 0.0;
    double theta_max = kPi;
    std::size_t theta_count = 181;
    double phi_min = 0.0;
    double phi_max = 2.0 * kPi;
    std::size_t phi_count = 361;

    double c_min = -3.0;
    double c_max = 5.0;
    std::size_t c_count = 201;
    double d_min = -3.0;
    double d_max = 5.0;
    std::size_t d_count = 201;
    double region_tau = 2.77;
    bool half_line = false;

    double a_min = 1e-3;
    double a_max = 2.0;
    std::size_t a_count = 40;

    std::size_t max_n = 50;
    std::size_t grid_points = 1024;

    double truncation = 1e-3;
    std::string approx;
    std::string format = "csv";
    std::string output;
    unsigned threads = 0;

    bool operator==(const RunConfig&) const = default;
};

#define LGBOUND_CONFIG_FIELDS(X)                                                                          \
    X(command) X(system) X(lambda) X(state) X(n) X(theta) X(phi) X(q) X(sigma) X(tau_min) X(tau_max)      \
    X(tau_count) X(theta_min) X(theta_max) X(theta_count) X(phi_min) X(phi_max) X(phi_count) X(c_min)     \
    X(c_max) X(c_count) X(d_min) X(d_max) X(d_count) X(region_tau) X(half_line) X(a_min) X(a_max)         \
    X(a_count) X(max_n) X(grid_points) X(truncation) X(approx) X(format) X(output) X(threads)

inline nlohmann::ordered_json to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
#define X(f) j[#f] = c.f;
    LGBOUND_CONFIG_FIELDS(X)
#undef X
    return j;
}

/// Missing keys keep their defaults; unknown keys are rejected.
inline RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {}) {
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
#define X(f)                                                                                    \
    if (key == #f) {                                                                            \
        known = true;                                                                           \
        try {                                                                                   \
            value.get_to(base.f);                                                               \
        } catch (const nlohmann::json::exception&) {                                            \
            throw ConfigError("config: bad value for '" + key + "'");                          \
        }                                                                                       \
    }
        LGBOUND_CONFIG_FIELDS(X)
#undef X
        if (!known) throw ConfigError("config: unknown key '" + key + "'");
    }
    return base;
}

#undef LGBOUND_CONFIG_FIELDS

/// "n=3", "theta=1.4,phi=3.14159" or "q=0.8,sigma=1".
inline void apply_state_spec(RunConfig& c, const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    bool has_n = false, has_sup = false, has_gauss = false;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("--state: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw ConfigError("--state: bad number '" + val + "'");
        }
        if (key == "n") {
            if (v < 0 || v != std::floor(v)) throw ConfigError("--state: n must be a non-negative integer");
            c.n = static_cast<std::size_t>(v);
            has_n = true;
        } else if (key == "theta") { c.theta = v; has_sup = true; }
        else if (key == "phi") { c.phi = v; has_sup = true; }
        else if (key == "q") { c.q = v; has_gauss = true; }
        else if (key == "sigma") { c.sigma = v; has_gauss = true; }
        else throw ConfigError("--state: unknown key '" + key + "'");
    }
    if (has_n + has_sup + has_gauss != 1) throw ConfigError("--state: mix of eigenstate, superposition and gaussian keys");
    c.state = has_n ? "eigenstate" : has_sup ? "superposition" : "gaussian";
}

inline void validate(const RunConfig& c) {
    if (std::find(commands().begin(), commands().end(), c.command) == commands().end())
        throw ConfigError("unknown command '" + c.command + "'");
    if (c.system != "qho" && c.system != "morse") throw ConfigError("--system must be qho or morse");
    if (c.state != "eigenstate" && c.state != "superposition" && c.state != "gaussian")
        throw ConfigError("state must be eigenstate, superposition or gaussian");
    const bool morse = c.system == "morse" || c.command == "morse-lg";
    if (morse) {
        if (!(c.lambda > 0.5) || !std::isfinite(c.lambda)) throw ConfigError("--lambda must exceed 1/2");
        if (c.state != "eigenstate") throw ConfigError("the Morse system supports eigenstates only");
        const auto count = static_cast<std::size_t>(std::floor(c.lambda - 0.5)) + 1;
        if (c.n >= count || static_cast<double>(c.n) >= c.lambda - 0.5)
            throw ConfigError("state n exceeds the Morse bound-state count");
    }
    if (c.state == "superposition") {
        if (!(c.theta >= 0.0 && c.theta <= kPi)) throw ConfigError("theta must lie in [0, pi]");
        if (!(c.phi >= 0.0 && c.phi <= 2.0 * kPi)) throw ConfigError("phi must lie in [0, 2pi]");
    }
    if (c.state == "gaussian" && c.command != "parity") throw ConfigError("gaussian states are used by 'parity' only");
    if (!(c.sigma > 0.0)) throw ConfigError("sigma must be positive");
    if (!(c.truncation > 0.0 && c.truncation < 1.0)) throw ConfigError("--truncation must lie in (0, 1)");
    if (c.format != "csv" && c.format != "json") throw ConfigError("--format must be csv or json");
    if (!c.approx.empty()) {
        if (c.approx != "three-term") throw ConfigError("--approx accepts only three-term");
        if (c.command != "correlator" || c.system != "qho" || c.state != "eigenstate" || c.n != 1)
            throw ConfigError("--approx three-term applies to 'correlator' for the oscillator state n=1");
    }
    if (c.max_n > kMaxEigenstateScan) throw ConfigError("--max-n must be <= 50");
    if (c.grid_points < 1024 && c.command == "classicalization")
        throw ConfigError("--grid-points must be >= 1024 for classicalization");
    if (c.grid_points < 4) throw ConfigError("--grid-points must be >= 4");
    if (!(c.a_min > 0.0) || !(c.a_max > c.a_min) || c.a_count < 2)
        throw ConfigError("smoothing axis needs 0 < a-min < a-max and a-count >= 2");
    try {
        Axis("tau", c.tau_min, c.tau_max, c.tau_count);
        Axis("theta", c.theta_min, c.theta_max, c.theta_count);
        Axis("phi", c.phi_min, c.phi_max, c.phi_count);
        Axis("c", c.c_min, c.c_max, c.c_count);
        Axis("d", c.d_min, c.d_max, c.d_count);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

// ---------------------------------------------------------------------------
// Tables and writers.

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;
    bool numerical_failure = false;
    std::string failure_reason;
};

inline std::string format_number(double v) {
    if (std::isnan(v)) return "";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

/// Header row, one line per record, CRLF-free, 15 significant digits;
/// NaN cells are left empty.
inline void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (const double* d = std::get_if<double>(&row[i])) os << csv_escape(format_number(*d));
            else os << csv_escape(std::get<std::string>(row[i]));
        }
        os << '\n';
    }
}

inline nlohmann::ordered_json cell_json(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return nullptr;
        return *d;
    }
    return std::get<std::string>(c);
}

inline void write_json(const Table& t, const RunConfig& cfg, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["config"] = to_json(cfg);
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t i = 0; i < row.size(); ++i) rec[t.columns[i]] = cell_json(row[i]);
        doc["records"].push_back(std::move(rec));
    }
    doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.summary) doc["summary"][k] = cell_json(v);
    os << doc.dump(2) << '\n';
}

inline Table table_from_scan(const ScanResult& r) {
    Table t;
    t.columns = r.coord_names;
    t.columns.insert(t.columns.end(), r.value_names.begin(), r.value_names.end());
    if (!r.label_name.empty()) t.columns.push_back(r.label_name);
    for (const auto& rec : r.records) {
        std::vector<Cell> row(rec.coords.begin(), rec.coords.end());
        row.insert(row.end(), rec.values.begin(), rec.values.end());
        if (!r.label_name.empty()) row.emplace_back(rec.label);
        t.rows.push_back(std::move(row));
    }
    for (const auto& [k, v] : r.summary) t.summary.emplace_back(k, v);
    return t;
}

inline Table table_from_report(const LGReport& rep) {
    Table t;
    t.columns = {"tau"};
    for (const auto& n : lg3_names()) t.columns.push_back(n);
    for (const auto& n : lg2_names()) t.columns.push_back(n);
    for (const auto& n : lg4_names()) t.columns.push_back(n);
    t.columns.insert(t.columns.end(), {"lg2_violated", "lg3_violated", "lg4_violated"});
    for (const auto& s : rep.samples) {
        std::vector<Cell> row{s.tau};
        for (double v : s.lg3) row.emplace_back(v);
        for (double v : s.lg2) row.emplace_back(v);
        for (double v : s.lg4) row.emplace_back(v);
        row.emplace_back(double(s.lg2_violated()));
        row.emplace_back(double(s.lg3_violated()));
        row.emplace_back(double(s.lg4_violated()));
        t.rows.push_back(std::move(row));
    }
    t.summary = {{"lg2_min", rep.lg2_min},         {"lg2_argmin", rep.lg2_argmin},
                 {"lg3_min", rep.lg3_min},         {"lg3_argmin", rep.lg3_argmin},
                 {"lg4_max", rep.lg4_max},         {"lg4_argmax", rep.lg4_argmax},
                 {"lg2_violated", double(rep.lg2_violated)}, {"lg2_23_violated", double(rep.lg2_violated_23)},
                 {"lg3_violated", double(rep.lg3_violated)}, {"lg4_violated", double(rep.lg4_violated)},
                 {"luders_fraction", rep.luders_fraction},   {"regime", to_string(rep.regime)}};
    return t;
}

// ---------------------------------------------------------------------------
// Commands.

namespace detail {

inline std::vector<double> tau_values(const RunConfig& c) { return Axis("tau", c.tau_min, c.tau_max, c.tau_count).values(); }

inline void flag_truncation(Table& t, double delta, double limit, const std::string& what) {
    t.summary.emplace_back("truncation_error", delta);
    if (delta > limit) {
        t.numerical_failure = true;
        t.failure_reason = what + ": truncation error " + format_number(delta) + " exceeds " + format_number(limit);
    }
}

inline Table cmd_correlator(const RunConfig& c) {
    const auto taus = tau_values(c);
    Table t;
    t.columns = {"tau", "C", "C_classical", "q_pp"};
    std::vector<double> cs(taus.size()), qs(taus.size());
    if (c.system == "morse") {
        const MorseTrace tr = scan_morse(c.lambda, c.n, taus, c.threads);
        for (std::size_t i = 0; i < taus.size(); ++i) {
            cs[i] = tr.correlator[i];
            qs[i] = 0.25 * (1.0 + 2.0 * tr.mean + cs[i]);
        }
        flag_truncation(t, tr.truncation_error, kTruncationWarning, "morse series");
        t.summary.emplace_back("mean", tr.mean);
    } else if (c.state == "superposition") {
        for (std::size_t i = 0; i < taus.size(); ++i) {
            const MomentData m = superposition_moments(c.theta, c.phi, 0.0, taus[i]);
            cs[i] = m.c12;
            qs[i] = m.q_table[0];
        }
    } else if (c.approx == "three-term") {
        for (std::size_t i = 0; i < taus.size(); ++i) {
            cs[i] = three_term_correlator(taus[i]);
            qs[i] = 0.25 * (1.0 + cs[i]);
        }
    } else if (c.n <= kMaxClosedForm) {
        for (std::size_t i = 0; i < taus.size(); ++i) {
            cs[i] = exact_qho_correlator(c.n, taus[i]);
            qs[i] = 0.25 * (1.0 + cs[i]);
        }
    } else {
        const EigenstateSeries s = EigenstateSeries::with_target(QhoSystem{}, c.n, c.truncation);
        parallel_for(taus.size(), [&](std::size_t i) {
            qs[i] = s.quasiprob(taus[i]);
            cs[i] = 4.0 * qs[i] - 1.0;
        }, c.threads);
        flag_truncation(t, s.truncation_error(), c.truncation, "oscillator series");
        t.summary.emplace_back("cutoff", double(s.cutoff()));
    }
    double c_min = kInf, c_min_tau = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        t.rows.push_back({taus[i], cs[i], classical_correlator(taus[i]), qs[i]});
        if (cs[i] < c_min) { c_min = cs[i]; c_min_tau = taus[i]; }
    }
    t.summary.emplace_back("C_min", c_min);
    t.summary.emplace_back("C_min_tau", c_min_tau);
    return t;
}

inline Table cmd_lg(const RunConfig& c) {
    const auto taus = tau_values(c);
    if (c.system == "morse" || c.command == "morse-lg") {
        const MorseTrace tr = scan_morse(c.lambda, c.n, taus, c.threads);
        Table t = table_from_report(tr.report);
        t.summary.emplace_back("mean", tr.mean);
        double c_min = kInf;
        for (double v : tr.correlator) c_min = std::min(c_min, v);
        t.summary.emplace_back("C_min", c_min);
        flag_truncation(t, tr.truncation_error, kTruncationWarning, "morse series");
        return t;
    }
    if (c.state == "superposition") return table_from_report(superposition_report(c.theta, c.phi, taus));
    if (c.n <= kMaxClosedForm) return table_from_report(lg_report(ExactEigenstateModel{c.n}, taus, c.threads));
    const EigenstateSeries s = EigenstateSeries::with_target(QhoSystem{}, c.n, c.truncation);
    Table t = table_from_report(lg_report(SeriesModel{&s}, taus, c.threads));
    flag_truncation(t, s.truncation_error(), c.truncation, "oscillator series");
    return t;
}

inline Table cmd_parity(const RunConfig& c) {
    const ParityMinimum pm = parity_min();
    Table t;
    t.columns = {"q_over_sigma", "lg2"};
    t.rows.push_back({pm.ratio, pm.value});
    t.summary = {{"argmin", pm.ratio}, {"min", pm.value}, {"sqrt_2_over_pi", std::sqrt(2.0 / kPi)}};
    if (c.state == "gaussian") t.summary.emplace_back("state_lg2", parity_lg2(c.q, c.sigma));
    return t;
}

}  // namespace detail

inline Table execute(const RunConfig& c) {
    validate(c);
    const std::string& cmd = c.command;
    if (cmd == "correlator") return detail::cmd_correlator(c);
    if (cmd == "lg" || cmd == "morse-lg") return detail::cmd_lg(c);
    if (cmd == "parity") return detail::cmd_parity(c);
    if (cmd == "scan-superposition")
        return table_from_scan(scan_superposition(Axis("theta", c.theta_min, c.theta_max, c.theta_count),
                                                  Axis("phi", c.phi_min, c.phi_max, c.phi_count),
                                                  Axis("tau", c.tau_min, c.tau_max, c.tau_count), c.threads));
    if (cmd == "scan-eigenstates")
        return table_from_scan(scan_eigenstate_violation(c.max_n, c.grid_points, c.truncation, c.threads));
    if (cmd == "classicalization")
        return table_from_scan(scan_classicalization(c.max_n, c.grid_points, c.truncation, c.threads));
    if (cmd == "scan-smoothing")
        return table_from_scan(scan_smoothing(log_values(c.a_min, c.a_max, c.a_count), 1, 512, kSmoothingCutoff,
                                              c.threads));
    if (cmd == "scan-region") {
        const Axis cs("c", c.c_min, c.c_max, c.c_count);
        const ScanResult r = c.half_line ? scan_region_half_line(cs, c.region_tau, 0, c.truncation, c.threads)
                                         : scan_region(cs, Axis("d", c.d_min, c.d_max, c.d_count), c.region_tau, 0,
                                                       c.truncation, c.threads);
        Table t = table_from_scan(r);
        return t;
    }
    throw ConfigError("unknown command '" + cmd + "'");
}

/// Parses argv-style arguments (without the program name). A --config file
/// is loaded first; flags given on the command line override it.
inline RunConfig parse_args(const std::vector<std::string>& args, std::string* help = nullptr) {
    CLI::App app{"Leggett-Garg correlators, quasi-probabilities and scans"};
    app.set_help_flag("-h,--help");
    std::vector<std::function<void(RunConfig&)>> apply;

    auto opt = [&]<class T>(const std::string& name, T RunConfig::*field, const std::string& desc) {
        auto holder = std::make_shared<T>();
        CLI::Option* o = nullptr;
        if constexpr (std::is_same_v<T, bool>)
            o = app.add_flag(name, *holder, desc);
        else
            o = app.add_option(name, *holder, desc);
        apply.push_back([o, holder, field](RunConfig& c) {
            if (o->count()) c.*field = *holder;
        });
        return o;
    };

    std::string command;
    app.add_option("command", command, "correlator | lg | scan-superposition | scan-eigenstates | scan-region | "
                                       "scan-smoothing | classicalization | parity | morse-lg")
        ->required();
    std::string config_path;
    app.add_option("--config", config_path, "flat JSON config file");
    std::string state_spec;
    CLI::Option* state_opt = app.add_option("--state", state_spec, "n=K | theta=T,phi=P | q=Q,sigma=S");
    opt("--system", &RunConfig::system, "qho | morse");
    opt("--lambda", &RunConfig::lambda, "Morse well parameter");
    CLI::Option* theta_opt = opt("--theta", &RunConfig::theta, "superposition angle theta");
    CLI::Option* phi_opt = opt("--phi", &RunConfig::phi, "superposition phase phi");
    opt("--tau-min", &RunConfig::tau_min, "first tau");
    opt("--tau-max", &RunConfig::tau_max, "last tau");
    opt("--tau-count", &RunConfig::tau_count, "tau points");
    opt("--theta-min", &RunConfig::theta_min, "scan-superposition theta axis");
    opt("--theta-max", &RunConfig::theta_max, "");
    opt("--theta-count", &RunConfig::theta_count, "");
    opt("--phi-min", &RunConfig::phi_min, "scan-superposition phi axis");
    opt("--phi-max", &RunConfig::phi_max, "");
    opt("--phi-count", &RunConfig::phi_count, "");
    opt("--c-min", &RunConfig::c_min, "scan-region c axis");
    opt("--c-max", &RunConfig::c_max, "");
    opt("--c-count", &RunConfig::c_count, "");
    opt("--d-min", &RunConfig::d_min, "scan-region d axis");
    opt("--d-max", &RunConfig::d_max, "");
    opt("--d-count", &RunConfig::d_count, "");
    opt("--tau", &RunConfig::region_tau, "scan-region time");
    opt("--half-line", &RunConfig::half_line, "scan-region: second region [c, inf)");
    opt("--a-min", &RunConfig::a_min, "scan-smoothing widths");
    opt("--a-max", &RunConfig::a_max, "");
    opt("--a-count", &RunConfig::a_count, "");
    opt("--max-n", &RunConfig::max_n, "largest eigenstate for scan-eigenstates / classicalization");
    opt("--grid-points", &RunConfig::grid_points, "periodic tau grid size for eigenstate scans");
    opt("--truncation", &RunConfig::truncation, "series truncation target");
    opt("--approx", &RunConfig::approx, "three-term");
    opt("--format", &RunConfig::format, "csv | json");
    opt("--output", &RunConfig::output, "output file (default stdout)");
    opt("--threads", &RunConfig::threads, "worker threads (default LGBOUND_THREADS or all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        if (help) *help = app.help();
        return {};
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    RunConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot open config file " + config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("config parse error: ") + e.what());
        }
        cfg = config_from_json(j);
    }
    cfg.command = command;
    for (auto& f : apply) f(cfg);
    if (state_opt->count()) apply_state_spec(cfg, state_spec);
    if (theta_opt->count() || phi_opt->count()) {
        if (state_opt->count() && cfg.state != "superposition")
            throw ConfigError("--theta/--phi conflict with --state");
        cfg.state = "superposition";
    }
    validate(cfg);
    return cfg;
}

inline void write_table(const Table& t, const RunConfig& cfg, std::ostream& os) {
    if (cfg.format == "json") write_json(t, cfg, os);
    else write_csv(t, os);
}

/// Full CLI run; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        std::string help;
        cfg = parse_args(args, &help);
        if (!help.empty()) {
            out << help;
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    Table table;
    try {
        table = execute(cfg);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }

    if (cfg.output.empty()) {
        write_table(table, cfg, out);
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.output << '\n';
            return kExitConfig;
        }
        write_table(table, cfg, file);
    }
    if (table.numerical_failure) {
        err << "warning: " << table.failure_reason << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace lgbound::cli
