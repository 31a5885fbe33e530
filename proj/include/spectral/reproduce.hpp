#pragma once

// End-to-end checks of the three worked examples (M = 120, 48, 12) and of
// the divisor-of-R shortcut: decisions, exact orthogonality and Q probes.

#include "spectral/eigen.hpp"
#include "spectral/instance.hpp"
#include "spectral/measure.hpp"
#include "spectral/spectra.hpp"
#include "spectral/validate.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spectral {

struct ClaimRow {
    std::string example;
    std::string claim;
    std::string expected;
    std::string observed;
    bool pass;
};

namespace detail {

inline std::string join(const std::vector<BigInt>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += to_decimal(values[i]);
    }
    return out + "}";
}

inline std::string describe(const EigenDecision& d) {
    std::string out = std::string(to_string(d.verdict)) + "/" + to_string(d.reason);
    if (d.cycle) out += " cycle " + join(d.cycle->nodes) + " digits " + join(d.cycle->digits);
    return out;
}

class ClaimLog {
public:
    explicit ClaimLog(std::string example) : example_(std::move(example)) {}

    void add(std::string claim, std::string expected, std::string observed, bool pass) {
        rows_.push_back({example_, std::move(claim), std::move(expected), std::move(observed), pass});
    }

    void digit_set(const ProblemInstance& inst, const std::vector<BigInt>& expected_L) {
        add("L", join(expected_L), join(inst.L()), inst.L() == expected_L);
    }

    void verdict(const ProblemInstance& inst, long long t, Verdict expected) {
        const EigenDecision d = decide_scaling(inst, BigInt(t));
        bool pass = d.verdict == expected;
        if (d.cycle) pass = pass && d.cycle->closes(inst.M());
        add("t=" + std::to_string(t), to_string(expected), describe(d), pass);
    }

    void shortcut(const ProblemInstance& inst, long long t) {
        const auto hint = shortcut_divisor(inst, BigInt(t));
        const EigenDecision d = decide_scaling(inst, BigInt(t));
        const bool pass = hint && *hint == Verdict::Spectrum && d.is_spectrum();
        add("shortcut t=" + std::to_string(t), "Spectrum (divisor power)",
            std::string(hint ? "shortcut Spectrum, " : "shortcut none, ") + to_string(d.verdict), pass);
    }

    void orthogonal(const ProblemInstance& inst, long long t, unsigned level) {
        const auto trunc = spectrum_level(inst, BigInt(t), level);
        const auto report = check_orthogonal_set(inst, trunc.elements);
        add("orthogonal t=" + std::to_string(t) + " k=" + std::to_string(level), "true",
            report.orthogonal ? "true" : "false", report.orthogonal);
    }

    void bessel(const ProblemInstance& inst, long long t, unsigned level) {
        const auto trunc = spectrum_level(inst, BigInt(t), level);
        const auto grid = default_grid();
        const auto report = completeness_probe(inst, trunc, grid);
        double q_min = 2.0, q_max = 0.0;
        for (const QSample& s : report.q_samples) {
            if (s.level != level) continue;
            q_min = std::min(q_min, s.value);
            q_max = std::max(q_max, s.value);
        }
        const bool pass = report.monotone && report.bessel && report.orthogonal;
        add("Q probe t=" + std::to_string(t) + " k=" + std::to_string(level), "monotone, <= 1",
            "Q_k in [" + std::to_string(q_min) + ", " + std::to_string(q_max) + "]", pass);
    }

    void missing(const ProblemInstance& inst, long long t, unsigned level) {
        const EigenDecision d = decide_scaling(inst, BigInt(t));
        if (!d.missing_frequency) {
            add("missing frequency t=" + std::to_string(t), "present", "absent", false);
            return;
        }
        const auto trunc = spectrum_level(inst, BigInt(t), level);
        const std::vector<double> grid;
        const auto report = completeness_probe(inst, trunc, grid, 1e-9, d.missing_frequency);
        double q_at_d = 0.0;
        for (const QSample& s : report.q_samples) q_at_d = std::max(q_at_d, s.value);
        const bool pass = report.missing_frequency_check && report.missing_frequency_check->confirmed && q_at_d <= 1e-12;
        add("missing frequency t=" + std::to_string(t), "d orthogonal to t*Lambda, d not in t*Lambda",
            "d=" + to_decimal(*d.missing_frequency) + ", Q(d)=" + std::to_string(q_at_d), pass);
    }

    std::vector<ClaimRow> take() { return std::move(rows_); }

private:
    std::string example_;
    std::vector<ClaimRow> rows_;
};

inline std::vector<BigInt> big_list(std::initializer_list<long long> values) {
    return {values.begin(), values.end()};
}

inline std::vector<ClaimRow> worked_example_m120() {
    const auto inst = build_instance(2, 15, 3, {1, 2});
    ClaimLog log("5.2");
    log.digit_set(inst, big_list({0, 15, 30, 45, 60, 75, 90, 105}));
    for (long long t : {3, 5, 15, 9, 25, 225}) log.verdict(inst, t, Verdict::Spectrum);
    for (long long t : {3, 5, 15, 9, 25, 225, 27, 125, 3375}) log.shortcut(inst, t);
    for (long long t : {1, 3, 5, 15}) log.orthogonal(inst, t, 2);
    log.bessel(inst, 1, 2);
    return log.take();
}

inline std::vector<ClaimRow> worked_example_m48() {
    const auto inst = build_instance(2, 3, 4, {3});
    ClaimLog log("5.3");
    log.digit_set(inst, big_list({0, 3, 24, 27}));
    for (long long t : {3, 9, 27}) log.verdict(inst, t, Verdict::Spectrum);
    for (long long t : {3, 9, 27}) log.shortcut(inst, t);
    for (long long t : {1, 3, 9, 27}) log.orthogonal(inst, t, 3);
    log.bessel(inst, 1, 3);
    return log.take();
}

inline std::vector<ClaimRow> worked_example_m12() {
    const auto inst = build_instance(2, 3, 2, {1});
    ClaimLog log("5.4");
    log.digit_set(inst, big_list({0, 3, 6, 9}));
    for (long long t = 1; t < 20; t += 2) log.verdict(inst, t, t == 11 ? Verdict::NotSpectrum : Verdict::Spectrum);
    for (long long t : {11, 33, 55, 121}) log.verdict(inst, t, Verdict::NotSpectrum);
    for (long long t : {3, 9, 27}) log.shortcut(inst, t);
    log.orthogonal(inst, 1, 3);
    log.orthogonal(inst, 11, 3);
    log.missing(inst, 11, 3);
    log.bessel(inst, 1, 4);
    return log.take();
}

}  // namespace detail

/// Runs the worked examples (M = 120, 48, 12); `which` is "5.2", "5.3", "5.4" or "all".
inline std::vector<ClaimRow> reproduce_worked_examples(std::string_view which = "all") {
    std::vector<ClaimRow> rows;
    auto append = [&](std::vector<ClaimRow> more) { rows.insert(rows.end(), more.begin(), more.end()); };
    if (which == "all" || which == "5.2") append(detail::worked_example_m120());
    if (which == "all" || which == "5.3") append(detail::worked_example_m48());
    if (which == "all" || which == "5.4") append(detail::worked_example_m12());
    if (rows.empty()) throw std::invalid_argument("unknown example '" + std::string(which) + "' (use 5.2, 5.3, 5.4 or all)");
    return rows;
}

}  // namespace spectral
