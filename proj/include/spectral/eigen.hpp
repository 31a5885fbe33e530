#pragma once

// Spectral eigenvalue decisions.
//
// Type 1: t*Lambda is a spectrum iff t is an integer coprime to N and the
// transition graph on T(M, tL) ∩ Z has no cycle through nonzero integers.
// With a periodic sign word of period r the same test runs on
// T(M^r, t*Sigma_{omega,r}).
//
// Type 2: some Lambda' has Lambda' and t*Lambda' both spectra iff
// t = t1/t2 in lowest terms with gcd(t1, N) = gcd(t2, N) = 1.

#include "spectral/attractor.hpp"
#include "spectral/bigint.hpp"
#include "spectral/errors.hpp"
#include "spectral/instance.hpp"
#include "spectral/spectra.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectral {

enum class Verdict { Spectrum, NotSpectrum };
enum class Reason { NonInteger, SharesFactorWithN, CycleFound, NoCycle };

inline const char* to_string(Verdict v) { return v == Verdict::Spectrum ? "Spectrum" : "NotSpectrum"; }

inline const char* to_string(Reason r) {
    switch (r) {
        case Reason::NonInteger: return "NonInteger";
        case Reason::SharesFactorWithN: return "SharesFactorWithN";
        case Reason::CycleFound: return "CycleFound";
        case Reason::NoCycle: return "NoCycle";
    }
    return "?";
}

struct EigenDecision {
    Rational t;  // as queried, sign preserved
    std::optional<SignWord> omega;
    Verdict verdict = Verdict::NotSpectrum;
    Reason reason = Reason::NonInteger;
    std::optional<std::size_t> integer_point_count;  // absent when decided before the graph is built
    std::optional<CycleWitness> cycle;
    std::optional<BigInt> missing_frequency;  // -eta_1, unsigned decisions only

    bool is_spectrum() const noexcept { return verdict == Verdict::Spectrum; }
};

namespace detail {

inline EigenDecision early_decision(const Rational& t, std::optional<SignWord> omega, Reason reason) {
    EigenDecision d;
    d.t = t;
    d.omega = std::move(omega);
    d.verdict = Verdict::NotSpectrum;
    d.reason = reason;
    return d;
}

inline void apply_cycle_criterion(EigenDecision& d, const AttractorSystem& sys) {
    d.integer_point_count = sys.nodes.size();
    d.cycle = find_nonzero_cycle(sys);
    if (d.cycle) {
        d.verdict = Verdict::NotSpectrum;
        d.reason = Reason::CycleFound;
    } else {
        d.verdict = Verdict::Spectrum;
        d.reason = Reason::NoCycle;
    }
}

inline std::vector<BigInt> scaled(const std::vector<BigInt>& values, const BigInt& t) {
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const BigInt& v : values) out.push_back(t * v);
    return out;
}

}  // namespace detail

/// Is t*Lambda a spectrum of mu_{M,D}?
inline EigenDecision decide_scaling(const ProblemInstance& inst, const Rational& t, const Budgets& budgets = {}) {
    if (t == 0) throw ZeroScaling();
    if (!is_integer(t)) return detail::early_decision(t, std::nullopt, Reason::NonInteger);
    const BigInt magnitude = abs_value(numerator_of(t));
    if (gcd(magnitude, inst.N()) != 1) return detail::early_decision(t, std::nullopt, Reason::SharesFactorWithN);

    EigenDecision d;
    d.t = t;
    const auto sys = build_graph(inst.M(), detail::scaled(inst.L(), magnitude), budgets.nodes);
    detail::apply_cycle_criterion(d, sys);
    if (d.cycle) d.missing_frequency = -d.cycle->nodes.front();
    return d;
}

inline EigenDecision decide_scaling(const ProblemInstance& inst, const BigInt& t, const Budgets& budgets = {}) {
    return decide_scaling(inst, Rational(t), budgets);
}

/// Is t*Lambda_omega a spectrum, omega periodic with period r?
inline EigenDecision decide_scaling_signed(const ProblemInstance& inst, const BigInt& t, const SignWord& omega,
                                           const Budgets& budgets = {}) {
    if (t == 0) throw ZeroScaling();
    if (gcd(t, inst.N()) != 1) return detail::early_decision(Rational(t), omega, Reason::SharesFactorWithN);

    EigenDecision d;
    d.t = Rational(t);
    d.omega = omega;
    const BigInt base = ipow(inst.M(), static_cast<unsigned>(omega.period()));
    const auto sys = build_graph(base, block_digit_set(inst, omega, t, budgets.elements), budgets.nodes);
    detail::apply_cycle_criterion(d, sys);
    return d;
}

namespace detail {

// Largest x >= 0 with x^k <= n.
inline BigInt integer_root(const BigInt& n, unsigned k) {
    if (k == 1 || n < 2) return n;
    BigInt lo = 1, hi = BigInt(1) << (msb(n) / k + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (ipow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace detail

/// Spectrum when t = u^k for a divisor u of R (k >= 0); no information otherwise.
inline std::optional<Verdict> shortcut_divisor(const ProblemInstance& inst, const BigInt& t) {
    if (t < 1) throw std::invalid_argument("shortcut_divisor requires t >= 1");
    if (t == 1) return Verdict::Spectrum;
    const unsigned max_k = msb(t);  // 2^k <= t
    for (unsigned k = 1; k <= max_k; ++k) {
        const BigInt u = detail::integer_root(t, k);
        if (ipow(u, k) == t && inst.R() % u == 0) return Verdict::Spectrum;
    }
    return std::nullopt;
}

/// Decisions for every nonzero t in [t_from, t_to], ascending.
inline std::vector<EigenDecision> search_eigenvalues(const ProblemInstance& inst, const BigInt& t_from,
                                                     const BigInt& t_to, const Budgets& budgets = {}) {
    if (t_from > t_to) throw std::invalid_argument("search range is empty: t_from > t_to");
    std::vector<EigenDecision> out;
    for (BigInt t = t_from; t <= t_to; ++t) {
        if (t == 0) continue;
        out.push_back(decide_scaling(inst, t, budgets));
    }
    return out;
}

/// Type-2 eigenvalue test for t = t1 / t2.
inline bool decide_second_type(const ProblemInstance& inst, const BigInt& t1, const BigInt& t2) {
    if (t1 == 0 || t2 == 0) throw ZeroScaling();
    const Rational t = make_rational(t1, t2);
    return gcd(numerator_of(t), inst.N()) == 1 && gcd(denominator_of(t), inst.N()) == 1;
}

/// Enumerates sign patterns of period r in binary order: pattern index i
/// has omega_j = -1 iff bit (r - j) of i is set.
inline SignWord sign_pattern(std::size_t r, std::size_t index) {
    std::vector<int> pattern(r, 1);
    for (std::size_t j = 0; j < r; ++j) {
        if ((index >> (r - 1 - j)) & 1u) pattern[j] = -1;
    }
    return SignWord(std::move(pattern));
}

/// First periodic sign word (period <= r_max) making t*Lambda_omega a spectrum
/// for every t in ts. An empty result means none within the search bound.
inline std::optional<SignWord> find_sign_word(const ProblemInstance& inst, const std::vector<BigInt>& ts,
                                              std::size_t r_max, const Budgets& budgets = {}) {
    if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
    if (r_max >= 8 * sizeof(std::size_t)) throw std::invalid_argument("r_max too large");
    for (const BigInt& t : ts) {
        if (t == 0) throw ZeroScaling();
        if (gcd(t, inst.N()) != 1) throw std::invalid_argument("every t must be coprime to N");
    }
    for (std::size_t r = 1; r <= r_max; ++r) {
        const std::size_t patterns = std::size_t{1} << r;
        for (std::size_t index = 0; index < patterns; ++index) {
            SignWord omega = sign_pattern(r, index);
            bool all = true;
            for (const BigInt& t : ts) {
                if (!decide_scaling_signed(inst, t, omega, budgets).is_spectrum()) {
                    all = false;
                    break;
                }
            }
            if (all) return omega;
        }
    }
    return std::nullopt;
}

}  // namespace spectral
