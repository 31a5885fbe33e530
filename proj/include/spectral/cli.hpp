#pragma once

// Command-line driver. Parses flags (or a JSON config file), runs one command
// and writes a table or a JSON report. Exit codes: 0 success, 1 a reproduced
// claim failed, 2 invalid instance or configuration, 3 budget exhausted.

#include "spectral/attractor.hpp"
#include "spectral/bigint.hpp"
#include "spectral/eigen.hpp"
#include "spectral/errors.hpp"
#include "spectral/instance.hpp"
#include "spectral/json_io.hpp"
#include "spectral/measure.hpp"
#include "spectral/reproduce.hpp"
#include "spectral/spectra.hpp"
#include "spectral/validate.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace spectral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"decide",  "search",   "signed",   "type2",
                                                "attractor", "zeroset", "validate", "reproduce-paper"};
    return names;
}

struct RunConfig {
    std::string command;
    std::optional<std::string> N, R;
    std::optional<long long> q;
    std::vector<long long> p;
    std::optional<std::string> t;  // integer, rational "a/b", or comma list for `signed` searches
    std::optional<std::string> t_from, t_to;
    std::optional<std::string> omega;  // comma list of +-1
    std::size_t r_max = 4;
    double tol = 1e-9;
    std::optional<std::string> xi;
    unsigned level = 3;
    std::size_t grid = 25;
    Budgets budgets;
    bool json = false;
    std::string example = "all";
};

class ConfigError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline std::vector<int> parse_omega(const std::string& text) {
    std::vector<int> pattern;
    for (const std::string& item : split(text)) {
        if (item == "1" || item == "+1")
            pattern.push_back(1);
        else if (item == "-1")
            pattern.push_back(-1);
        else
            throw ConfigError("omega entries must be 1 or -1, got '" + item + "'");
    }
    return pattern;
}

inline std::string json_scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const Json& x : v) {
            if (!out.empty()) out += ",";
            out += json_scalar(x);
        }
        return out;
    }
    return v.dump();
}

inline ProblemInstance instance_of(const RunConfig& cfg) {
    if (!cfg.N || !cfg.R || !cfg.q) throw ConfigError("instance needs --N, --R and --q");
    return build_instance(parse_integer(*cfg.N), parse_integer(*cfg.R), *cfg.q, cfg.p);
}

inline const std::string& require(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw ConfigError(std::string("missing ") + flag);
    return *v;
}

inline void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline std::string table_row(const EigenDecision& d) {
    std::ostringstream row;
    row << std::setw(8) << to_decimal(d.t) << "  " << std::setw(11) << to_string(d.verdict) << "  " << std::setw(17)
        << to_string(d.reason) << "  " << std::setw(6)
        << (d.integer_point_count ? std::to_string(*d.integer_point_count) : std::string("-"));
    if (d.cycle) {
        row << "  cycle";
        for (std::size_t i = 0; i < d.cycle->length(); ++i)
            row << " " << to_decimal(d.cycle->nodes[i]) << "[" << to_decimal(d.cycle->digits[i]) << "]";
    }
    if (d.missing_frequency) row << "  missing " << to_decimal(*d.missing_frequency);
    return row.str();
}

inline const char* table_header() {
    return "       t      verdict             reason  #T∩Z  witness";
}

inline void print_instance_line(std::ostream& out, const ProblemInstance& inst) {
    out << "instance N=" << inst.N() << " R=" << inst.R() << " q=" << inst.q() << " p=[";
    for (std::size_t i = 0; i < inst.p().size(); ++i) out << (i ? "," : "") << inst.p()[i];
    out << "]  M=" << inst.M() << "  L=" << spectral::detail::join(inst.L()) << '\n';
    if (inst.s() == 0) out << "note: s = 0 (consecutive digits only)\n";
}

}  // namespace detail

inline int run_command(const RunConfig& cfg, std::ostream& out) {
    using namespace detail;
    const std::string& cmd = cfg.command;

    if (cmd == "reproduce-paper") {
        const auto rows = reproduce_worked_examples(cfg.example);
        bool all = true;
        for (const ClaimRow& r : rows) all = all && r.pass;
        if (cfg.json) {
            Json j;
            Json arr = Json::array();
            for (const ClaimRow& r : rows) {
                Json row;
                row["example"] = r.example;
                row["claim"] = r.claim;
                row["expected"] = r.expected;
                row["observed"] = r.observed;
                row["pass"] = r.pass;
                arr.push_back(std::move(row));
            }
            j["claims"] = std::move(arr);
            j["all_pass"] = all;
            print(out, j);
        } else {
            for (const ClaimRow& r : rows) {
                out << (r.pass ? "PASS" : "FAIL") << "  [" << r.example << "] " << r.claim << ": expected "
                    << r.expected << ", observed " << r.observed << '\n';
            }
            out << (all ? "all claims reproduced" : "some claims FAILED") << '\n';
        }
        return all ? kExitOk : kExitClaimFailed;
    }

    const ProblemInstance inst = instance_of(cfg);

    if (cmd == "decide") {
        const Rational t = parse_rational(require(cfg.t, "--t"));
        const EigenDecision d = decide_scaling(inst, t, cfg.budgets);
        if (cfg.json) {
            print(out, decision_to_json(d));
        } else {
            print_instance_line(out, inst);
            out << table_header() << '\n' << table_row(d) << '\n';
            if (is_integer(t) && numerator_of(t) >= 1) {
                if (shortcut_divisor(inst, numerator_of(t))) out << "t is a power of a divisor of R\n";
            }
        }
        return kExitOk;
    }

    if (cmd == "search") {
        const BigInt from = parse_integer(require(cfg.t_from, "--t-from"));
        const BigInt to = parse_integer(require(cfg.t_to, "--t-to"));
        const auto decisions = search_eigenvalues(inst, from, to, cfg.budgets);
        if (cfg.json) {
            Json j;
            j["instance"] = instance_to_json(inst);
            Json arr = Json::array();
            for (const auto& d : decisions) arr.push_back(decision_to_json(d));
            j["decisions"] = std::move(arr);
            print(out, j);
        } else {
            print_instance_line(out, inst);
            out << table_header() << '\n';
            for (const auto& d : decisions) out << table_row(d) << '\n';
        }
        return kExitOk;
    }

    if (cmd == "signed") {
        std::vector<BigInt> ts;
        for (const std::string& item : split(require(cfg.t, "--t"))) ts.push_back(parse_integer(item));
        if (ts.empty()) throw ConfigError("--t must name at least one scaling");
        if (cfg.omega) {
            const SignWord omega(parse_omega(*cfg.omega));
            std::vector<EigenDecision> decisions;
            for (const BigInt& t : ts) decisions.push_back(decide_scaling_signed(inst, t, omega, cfg.budgets));
            if (cfg.json) {
                if (decisions.size() == 1) {
                    print(out, decision_to_json(decisions.front()));
                } else {
                    Json arr = Json::array();
                    for (const auto& d : decisions) arr.push_back(decision_to_json(d));
                    print(out, arr);
                }
            } else {
                print_instance_line(out, inst);
                out << "omega " << omega.to_string() << '\n' << table_header() << '\n';
                for (const auto& d : decisions) out << table_row(d) << '\n';
            }
            return kExitOk;
        }
        const auto found = find_sign_word(inst, ts, cfg.r_max, cfg.budgets);
        if (cfg.json) {
            Json j;
            j["t"] = big_array(ts);
            j["r_max"] = cfg.r_max;
            j["omega"] = found ? Json(found->pattern()) : Json(nullptr);
            print(out, j);
        } else {
            print_instance_line(out, inst);
            if (found)
                out << "sign word " << found->to_string() << " makes t*Lambda_omega a spectrum for every t\n";
            else
                out << "no sign word with period <= " << cfg.r_max << " found (not a proof of nonexistence)\n";
        }
        return kExitOk;
    }

    if (cmd == "type2") {
        const Rational t = parse_rational(require(cfg.t, "--t"));
        if (t == 0) throw ZeroScaling();
        const BigInt t1 = numerator_of(t), t2 = denominator_of(t);
        const bool ok = decide_second_type(inst, t1, t2);
        std::optional<SignWord> omega;
        if (ok) omega = find_sign_word(inst, {t1, t2}, cfg.r_max, cfg.budgets);
        if (cfg.json) {
            Json j;
            j["t"] = to_decimal(t);
            j["t1"] = to_decimal(t1);
            j["t2"] = to_decimal(t2);
            j["second_type"] = ok;
            if (ok) j["omega"] = omega ? Json(omega->pattern()) : Json(nullptr);
            print(out, j);
        } else {
            print_instance_line(out, inst);
            out << "t = " << to_decimal(t) << ": " << (ok ? "type-2 spectral eigenvalue" : "not a type-2 eigenvalue")
                << '\n';
            if (ok && omega)
                out << "witness: Lambda' = " << t2 << " * Lambda_omega with omega = " << omega->to_string() << '\n';
            else if (ok)
                out << "no common sign word with period <= " << cfg.r_max << " found\n";
        }
        return kExitOk;
    }

    if (cmd == "attractor") {
        const BigInt t = parse_integer(require(cfg.t, "--t"));
        if (t == 0) throw ZeroScaling();
        AttractorSystem sys;
        if (cfg.omega) {
            const SignWord omega(parse_omega(*cfg.omega));
            sys = build_graph(ipow(inst.M(), static_cast<unsigned>(omega.period())),
                              block_digit_set(inst, omega, t, cfg.budgets.elements), cfg.budgets.nodes);
        } else {
            std::vector<BigInt> digits;
            for (const BigInt& l : inst.L()) digits.push_back(t * l);
            sys = build_graph(inst.M(), digits, cfg.budgets.nodes);
        }
        const auto cycle = find_nonzero_cycle(sys);
        if (cfg.json) {
            Json j = graph_to_json(sys);
            j["cycle"] = cycle ? cycle_to_json(*cycle) : Json(nullptr);
            print(out, j);
        } else {
            print_instance_line(out, inst);
            out << "base " << sys.base << ", candidates [" << sys.candidate_lo << ", " << sys.candidate_hi << "], "
                << sys.nodes.size() << " integer points\n";
            for (const AttractorEdge& e : sys.edges)
                out << "  " << sys.nodes[e.from] << " --" << e.digit << "--> " << sys.nodes[e.to] << '\n';
            if (cycle) {
                out << "nonzero cycle:";
                for (std::size_t i = 0; i < cycle->length(); ++i) out << " " << cycle->nodes[i] << "[" << cycle->digits[i] << "]";
                out << '\n';
            } else {
                out << "no nonzero cycle\n";
            }
        }
        return kExitOk;
    }

    if (cmd == "zeroset") {
        const Rational xi = parse_rational(require(cfg.xi, "--xi"));
        const auto level = zero_set_level(inst, xi);
        if (cfg.json) {
            Json j;
            j["xi"] = to_decimal(xi);
            j["member"] = level.has_value();
            j["level"] = level ? Json(*level) : Json(nullptr);
            print(out, j);
        } else {
            out << "xi = " << to_decimal(xi) << (level ? " is" : " is not") << " a zero of the Fourier transform";
            if (level) out << " (level k = " << *level << ")";
            out << '\n';
        }
        return kExitOk;
    }

    if (cmd == "validate") {
        const BigInt t = parse_integer(require(cfg.t, "--t"));
        std::optional<SignWord> omega;
        if (cfg.omega) omega = SignWord(parse_omega(*cfg.omega));
        const EigenDecision d = omega ? decide_scaling_signed(inst, t, *omega, cfg.budgets)
                                      : decide_scaling(inst, t, cfg.budgets);
        const auto trunc = spectrum_level(inst, t, cfg.level, omega, cfg.budgets.elements);
        const auto grid = default_grid(cfg.grid);
        const auto report = completeness_probe(inst, trunc, grid, cfg.tol, d.missing_frequency, cfg.budgets.elements);
        if (cfg.json) {
            Json j;
            j["decision"] = decision_to_json(d);
            j["level"] = cfg.level;
            j["report"] = report_to_json(report);
            print(out, j);
        } else {
            print_instance_line(out, inst);
            out << table_header() << '\n' << table_row(d) << '\n';
            out << "orthogonal (exact): " << (report.orthogonal ? "yes" : "no");
            if (report.failing_pair)
                out << "  first failing pair (" << report.failing_pair->first << ", " << report.failing_pair->second << ")";
            out << "\nQ monotone: " << (report.monotone ? "yes" : "no") << "   Bessel bound: " << (report.bessel ? "yes" : "no")
                << '\n';
            out << std::setprecision(12);
            for (const QSample& s : report.q_samples) {
                if (s.level == cfg.level) out << "  Q_" << s.level << "(" << s.xi << ") = " << s.value << '\n';
            }
            if (report.missing_frequency_check)
                out << "missing frequency " << report.missing_frequency_check->frequency
                    << (report.missing_frequency_check->confirmed ? " confirmed exactly" : " NOT confirmed") << '\n';
        }
        return kExitOk;
    }

    throw ConfigError("unknown command '" + cmd + "'");
}

/// Applies the fields of a JSON config file that were not given as flags.
inline void merge_config(RunConfig& cfg, const Json& j, const CLI::App& app) {
    auto unset = [&](const char* flag) { return app.count(flag) == 0; };
    using detail::json_scalar;
    if (j.contains("command") && cfg.command.empty()) cfg.command = j.at("command").get<std::string>();
    if (j.contains("N") && unset("--N")) cfg.N = json_scalar(j.at("N"));
    if (j.contains("R") && unset("--R")) cfg.R = json_scalar(j.at("R"));
    if (j.contains("q") && unset("--q")) cfg.q = big_from_json(j.at("q")).convert_to<long long>();
    if (j.contains("p") && unset("--p")) {
        cfg.p.clear();
        for (const Json& v : j.at("p")) cfg.p.push_back(big_from_json(v).convert_to<long long>());
    }
    if (j.contains("t") && unset("--t")) cfg.t = json_scalar(j.at("t"));
    if (j.contains("t-from") && unset("--t-from")) cfg.t_from = json_scalar(j.at("t-from"));
    if (j.contains("t-to") && unset("--t-to")) cfg.t_to = json_scalar(j.at("t-to"));
    if (j.contains("omega") && unset("--omega")) cfg.omega = json_scalar(j.at("omega"));
    if (j.contains("r-max") && unset("--r-max")) cfg.r_max = j.at("r-max").get<std::size_t>();
    if (j.contains("tol") && unset("--tol")) cfg.tol = j.at("tol").get<double>();
    if (j.contains("xi") && unset("--xi")) cfg.xi = json_scalar(j.at("xi"));
    if (j.contains("level") && unset("--level")) cfg.level = j.at("level").get<unsigned>();
    if (j.contains("grid") && unset("--grid")) cfg.grid = j.at("grid").get<std::size_t>();
    if (j.contains("node-budget") && unset("--node-budget")) cfg.budgets.nodes = j.at("node-budget").get<std::size_t>();
    if (j.contains("element-budget") && unset("--element-budget"))
        cfg.budgets.elements = j.at("element-budget").get<std::size_t>();
    if (j.contains("word-budget") && unset("--word-budget")) cfg.budgets.words = j.at("word-budget").get<std::size_t>();
    if (j.contains("json") && unset("--json")) cfg.json = j.at("json").get<bool>();
    if (j.contains("example") && unset("--example")) cfg.example = json_scalar(j.at("example"));
}

/// Parses argv and runs; diagnostics go to `err` as a single line.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string config_path;
    std::string command;

    CLI::App app{"Spectral eigenvalue engine for product-form self-similar measures"};
    app.add_option("command", command, "decide | search | signed | type2 | attractor | zeroset | validate | reproduce-paper")
        ->check(CLI::IsMember(commands()));
    app.add_option("--N", cfg.N, "base digit count N >= 2");
    app.add_option("--R", cfg.R, "cofactor R >= 2, gcd(R,N) = 1");
    app.add_option("--q", cfg.q, "exponent q >= 1 (M = R*N^q)");
    app.add_option("--p", cfg.p, "comma list p_1 < ... < p_s < q")->delimiter(',');
    app.add_option("--t", cfg.t, "scaling: integer, a/b, or comma list (signed search)");
    app.add_option("--t-from", cfg.t_from, "search range start");
    app.add_option("--t-to", cfg.t_to, "search range end");
    app.add_option("--omega", cfg.omega, "periodic sign word, comma list of 1/-1");
    app.add_option("--r-max", cfg.r_max, "largest sign-word period to search");
    app.add_option("--tol", cfg.tol, "numeric tolerance for the Q probe");
    app.add_option("--xi", cfg.xi, "exact frequency for zeroset (integer or a/b)");
    app.add_option("--level", cfg.level, "truncation level for validate");
    app.add_option("--grid", cfg.grid, "number of grid points in [0,1) for validate");
    app.add_option("--node-budget", cfg.budgets.nodes, "attractor candidate budget");
    app.add_option("--element-budget", cfg.budgets.elements, "spectrum truncation budget");
    app.add_option("--word-budget", cfg.budgets.words, "word search budget");
    app.add_flag("--json", cfg.json, "emit JSON");
    app.add_option("--example", cfg.example, "worked example to rerun: 5.2 (M=120), 5.3 (M=48), 5.4 (M=12) or all");
    app.add_option("--config", config_path, "JSON config file with the same fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        cfg.command = command;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
            merge_config(cfg, Json::parse(in), app);
        }
        if (cfg.command.empty()) throw ConfigError("no command given");
        if (std::find(commands().begin(), commands().end(), cfg.command) == commands().end())
            throw ConfigError("unknown command '" + cfg.command + "'");
        if (cfg.budgets.nodes == 0 || cfg.budgets.elements == 0 || cfg.budgets.words == 0)
            throw ConfigError("budgets must be positive");
        return run_command(cfg, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        err << "error: bad config: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

}  // namespace spectral::cli
