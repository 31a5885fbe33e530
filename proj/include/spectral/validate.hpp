#pragma once

// Independent checks of decisions: exact orthogonality of element lists and
// the completeness functional Q(xi) = sum_lambda |mu^(xi - lambda)|^2, which is
// bounded by 1 for orthogonal families and identically 1 for spectra.

#include "spectral/bigint.hpp"
#include "spectral/instance.hpp"
#include "spectral/measure.hpp"
#include "spectral/spectra.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spectral {

struct QSample {
    double xi;
    unsigned level;
    double value;
};

struct MissingFrequencyCheck {
    BigInt frequency;
    bool confirmed;
};

struct ValidationReport {
    bool orthogonal = true;
    std::optional<std::pair<BigInt, BigInt>> failing_pair;
    std::vector<QSample> q_samples;
    bool monotone = true;
    bool bessel = true;
    std::optional<MissingFrequencyCheck> missing_frequency_check;

    bool ok() const {
        return orthogonal && monotone && bessel && (!missing_frequency_check || missing_frequency_check->confirmed);
    }
};

/// Exact check that all differences of distinct elements are zeros of mu^.
/// Pairs are scanned in ascending order of the sorted list.
inline ValidationReport check_orthogonal_set(const ProblemInstance& inst, std::span<const BigInt> elements) {
    std::vector<BigInt> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    ValidationReport report;
    const ZeroSetTester tester(inst);

    const bool small = std::all_of(sorted.begin(), sorted.end(), [](const BigInt& x) {
        return abs_value(x) < (BigInt(1) << 61);
    });
    if (small) {
        std::vector<std::int64_t> values;
        values.reserve(sorted.size());
        for (const BigInt& x : sorted) values.push_back(x.convert_to<std::int64_t>());
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                if (!tester.contains(values[j] - values[i])) {
                    report.orthogonal = false;
                    report.failing_pair = {sorted[i], sorted[j]};
                    return report;
                }
            }
        }
        return report;
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (!tester.contains(BigInt(sorted[j] - sorted[i]))) {
                report.orthogonal = false;
                report.failing_pair = {sorted[i], sorted[j]};
                return report;
            }
        }
    }
    return report;
}

/// |mu^(base + xi - lambda)|^2 for one element; base carries an exact integer offset.
inline double q_term(const ProblemInstance& inst, const BigInt& lambda, double xi, double tol,
                     const BigInt& base = BigInt(0)) {
    return std::norm(fourier_value(inst, BigInt(base - lambda), xi, tol));
}

inline double q_function(const ProblemInstance& inst, std::span<const BigInt> elements, double xi,
                         double tol = 1e-12) {
    double sum = 0.0;
    for (const BigInt& lambda : elements) sum += q_term(inst, lambda, xi, tol);
    return sum;
}

/// Equispaced grid of `count` points in [0, 1).
inline std::vector<double> default_grid(std::size_t count = 25) {
    std::vector<double> grid;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(count));
    return grid;
}

/// Q_j(xi) over the nested truncations j = 1..trunc.level, with Bessel and
/// monotonicity checks, exact orthogonality of the deepest level, and, when a
/// missing frequency d is supplied, exact confirmation that d - lambda is a
/// zero for every listed lambda at every level.
inline ValidationReport completeness_probe(const ProblemInstance& inst, const SpectrumTruncation& trunc,
                                           std::span<const double> grid, double tol = 1e-9,
                                           const std::optional<BigInt>& missing_frequency = std::nullopt,
                                           std::size_t element_budget = Budgets{}.elements) {
    ValidationReport report = check_orthogonal_set(inst, trunc.elements);
    const double fourier_tol = std::min(tol, 1e-12);

    std::vector<std::vector<BigInt>> levels;
    for (unsigned j = 1; j <= trunc.level; ++j)
        levels.push_back(spectrum_level(inst, trunc.t, j, trunc.omega, element_budget).elements);

    // Q_{j+1} - Q_j sums the new elements only, so nesting must hold exactly.
    std::vector<std::vector<BigInt>> fresh(levels.size());
    for (std::size_t j = 0; j < levels.size(); ++j) {
        if (j == 0) {
            fresh[j] = levels[j];
            continue;
        }
        if (!std::includes(levels[j].begin(), levels[j].end(), levels[j - 1].begin(), levels[j - 1].end()))
            report.monotone = false;
        std::set_difference(levels[j].begin(), levels[j].end(), levels[j - 1].begin(), levels[j - 1].end(),
                            std::back_inserter(fresh[j]));
    }

    auto sweep = [&](const BigInt& base, double xi) {
        double q = 0.0, previous = 0.0;
        for (std::size_t j = 0; j < levels.size(); ++j) {
            for (const BigInt& lambda : fresh[j]) q += q_term(inst, lambda, xi, fourier_tol, base);
            report.q_samples.push_back({base.convert_to<double>() + xi, static_cast<unsigned>(j + 1), q});
            if (q < previous) report.monotone = false;
            if (q > 1.0 + tol) report.bessel = false;
            previous = q;
        }
    };
    for (double xi : grid) sweep(BigInt(0), xi);

    if (missing_frequency) {
        const ZeroSetTester tester(inst);
        bool confirmed = true;
        for (const auto& level : levels) {
            for (const BigInt& lambda : level) confirmed = confirmed && tester.contains(BigInt(*missing_frequency - lambda));
        }
        report.missing_frequency_check = MissingFrequencyCheck{*missing_frequency, confirmed};
        sweep(*missing_frequency, 0.0);
    }
    return report;
}

}  // namespace spectral
