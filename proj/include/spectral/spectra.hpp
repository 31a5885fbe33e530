#pragma once

// Finite truncations of the spectra t*Lambda and t*Lambda_omega:
//   { t * sum_{j=1}^{k} l_j omega_j M^{j-1} : l_j in L }
// and the block digit sets t*Sigma_{omega,r} (the same sum with k = r).

#include "spectral/bigint.hpp"
#include "spectral/errors.hpp"
#include "spectral/instance.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectral {

/// A periodic +-1 word omega = (pattern)^infinity.
class SignWord {
public:
    explicit SignWord(std::vector<int> pattern) : pattern_(std::move(pattern)) {
        if (pattern_.empty()) throw std::invalid_argument("sign word period must be at least 1");
        for (int w : pattern_) {
            if (w != 1 && w != -1) throw std::invalid_argument("sign word entries must be +1 or -1");
        }
    }
    SignWord(std::initializer_list<int> pattern) : SignWord(std::vector<int>(pattern)) {}

    static SignWord all_ones(std::size_t period = 1) { return SignWord(std::vector<int>(period, 1)); }

    std::size_t period() const noexcept { return pattern_.size(); }
    const std::vector<int>& pattern() const noexcept { return pattern_; }
    /// omega_j for j >= 1.
    int at(std::size_t j) const { return pattern_[(j - 1) % pattern_.size()]; }

    bool is_all_ones() const {
        return std::all_of(pattern_.begin(), pattern_.end(), [](int w) { return w == 1; });
    }

    bool operator==(const SignWord&) const = default;

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < pattern_.size(); ++i) {
            if (i) out += ',';
            out += pattern_[i] > 0 ? "1" : "-1";
        }
        return out + ")";
    }

private:
    std::vector<int> pattern_;
};

struct SpectrumTruncation {
    const ProblemInstance* instance = nullptr;
    BigInt t;
    std::optional<SignWord> omega;
    unsigned level = 0;
    std::vector<BigInt> elements;  // sorted ascending, duplicate-free
};

namespace detail {

inline void check_element_budget(const ProblemInstance& inst, unsigned levels, std::size_t budget) {
    BigInt total = ipow(BigInt(inst.digit_count()), levels);
    if (total > budget) throw BudgetExceeded("element", budget);
}

// t * sum_{j=1}^{levels} l_j sign(j) M^{j-1}, sorted; duplicates are a logic error.
template <class SignAt>
std::vector<BigInt> signed_expansions(const ProblemInstance& inst, const BigInt& t, unsigned levels,
                                      SignAt sign_at) {
    std::vector<BigInt> current{BigInt(0)};
    BigInt place = t;
    for (unsigned j = 1; j <= levels; ++j) {
        std::vector<BigInt> next;
        next.reserve(current.size() * inst.L().size());
        const int sign = sign_at(j);
        for (const BigInt& l : inst.L()) {
            const BigInt step = sign > 0 ? BigInt(place * l) : BigInt(-(place * l));
            for (const BigInt& x : current) next.push_back(x + step);
        }
        current = std::move(next);
        place *= inst.M();
    }
    std::sort(current.begin(), current.end());
    if (std::adjacent_find(current.begin(), current.end()) != current.end())
        throw std::logic_error("signed digit expansion produced a duplicate element");
    return current;
}

}  // namespace detail

inline SpectrumTruncation spectrum_level(const ProblemInstance& inst, const BigInt& t, unsigned k,
                                         const std::optional<SignWord>& omega = std::nullopt,
                                         std::size_t element_budget = Budgets{}.elements) {
    if (t == 0) throw ZeroScaling();
    if (k < 1) throw std::invalid_argument("truncation level must be at least 1");
    detail::check_element_budget(inst, k, element_budget);

    SpectrumTruncation out;
    out.instance = &inst;
    out.t = t;
    out.omega = omega;
    out.level = k;
    out.elements = detail::signed_expansions(inst, t, k, [&](std::size_t j) { return omega ? omega->at(j) : 1; });
    return out;
}

/// t * Sigma_{omega,r}, r = period of omega.
inline std::vector<BigInt> block_digit_set(const ProblemInstance& inst, const SignWord& omega, const BigInt& t,
                                           std::size_t element_budget = Budgets{}.elements) {
    if (t == 0) throw ZeroScaling();
    const auto r = static_cast<unsigned>(omega.period());
    detail::check_element_budget(inst, r, element_budget);
    return detail::signed_expansions(inst, t, r, [&](std::size_t j) { return omega.at(j); });
}

}  // namespace spectral
