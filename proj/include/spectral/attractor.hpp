#pragma once

// Integer points of the attractor T(b, C) = { sum_{j>=1} b^{-j} c_j : c_j in C }
// and the digit-labelled transition graph z --c--> b*z - c on them.
//
// A cycle of nonzero integers eta_{j+1} = (eta_j + s_j) / b is a witness that
// the scaled spectrum is not maximal; the word search is an independent
// arithmetic oracle for the same property.

#include "spectral/bigint.hpp"
#include "spectral/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace spectral {

struct AttractorEdge {
    std::size_t from;  // index into nodes
    BigInt digit;
    std::size_t to;  // index into nodes, nodes[to] = b * nodes[from] - digit
};

struct AttractorSystem {
    BigInt base;
    std::vector<BigInt> digits;      // sorted, duplicate-free
    BigInt candidate_lo, candidate_hi;  // empty interval when lo > hi
    std::vector<BigInt> nodes;          // sorted
    std::vector<AttractorEdge> edges;   // ordered by source node, then digit

    std::optional<std::size_t> index_of(const BigInt& z) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), z);
        if (it == nodes.end() || *it != z) return std::nullopt;
        return static_cast<std::size_t>(it - nodes.begin());
    }
};

struct CycleWitness {
    std::vector<BigInt> nodes;   // eta_1 .. eta_m, all nonzero
    std::vector<BigInt> digits;  // s_1 .. s_m with eta_{j+1} = (eta_j + s_j) / b, cyclically

    std::size_t length() const noexcept { return nodes.size(); }

    /// (b^m - 1) * eta_1 == sum_j b^{j-1} s_j
    bool closes(const BigInt& b) const {
        if (nodes.empty() || nodes.size() != digits.size()) return false;
        BigInt sum = 0, place = 1;
        for (const BigInt& s : digits) {
            sum += place * s;
            place *= b;
        }
        return (place - 1) * nodes.front() == sum;
    }

    bool operator==(const CycleWitness&) const = default;
};

struct WordWitness {
    std::size_t length;
    std::vector<BigInt> word;
};

namespace detail {

inline std::vector<BigInt> normalized_digits(std::span<const BigInt> C) {
    std::vector<BigInt> digits(C.begin(), C.end());
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    return digits;
}

// Greatest fixed point of S -> { z : some b*z - c in S } on the interval
// [lo, lo + n). Works on offsets; Int must hold b*(|lo|+n) + max|c| exactly.
template <class Int>
std::vector<char> prune_candidates(const Int& b, const Int& lo, std::size_t n, const std::vector<Int>& digits) {
    std::vector<char> alive(n, 1);
    std::vector<std::uint32_t> out_degree(n, 0);
    const Int size = static_cast<Int>(n);

    auto target = [&](std::size_t i, const Int& c) -> std::optional<std::size_t> {
        const Int z = lo + static_cast<Int>(i);
        const Int w = b * z - c - lo;
        if (w < 0 || w >= size) return std::nullopt;
        return static_cast<std::size_t>(w);
    };

    std::vector<std::size_t> dead;
    for (std::size_t i = 0; i < n; ++i) {
        for (const Int& c : digits) {
            if (target(i, c)) ++out_degree[i];
        }
        if (out_degree[i] == 0) {
            alive[i] = 0;
            dead.push_back(i);
        }
    }
    // Removing w lowers the degree of each predecessor z = (w + c) / b.
    while (!dead.empty()) {
        const std::size_t w = dead.back();
        dead.pop_back();
        const Int value = lo + static_cast<Int>(w);
        for (const Int& c : digits) {
            const Int sum = value + c;
            if (sum % b != 0) continue;
            const Int z = sum / b - lo;
            if (z < 0 || z >= size) continue;
            const auto i = static_cast<std::size_t>(z);
            if (!alive[i]) continue;
            if (--out_degree[i] == 0) {
                alive[i] = 0;
                dead.push_back(i);
            }
        }
    }
    return alive;
}

inline bool fits_machine_words(const BigInt& b, const BigInt& lo, std::size_t n, const std::vector<BigInt>& digits) {
    const BigInt limit = BigInt(1) << 62;
    BigInt max_c = 0;
    for (const BigInt& c : digits) max_c = std::max(max_c, abs_value(c));
    return abs_value(b) * (abs_value(lo) + n + 1) + max_c + abs_value(lo) < limit;
}

}  // namespace detail

/// Candidate interval [ceil(min C/(b-1)), floor(max C/(b-1))] containing T(b, C).
inline std::pair<BigInt, BigInt> candidate_interval(const BigInt& b, std::span<const BigInt> C) {
    const auto [lo_it, hi_it] = std::minmax_element(C.begin(), C.end());
    return {ceil_div(*lo_it, b - 1), floor_div(*hi_it, b - 1)};
}

/// T(b, C) intersected with the integers, ascending.
inline std::vector<BigInt> integer_points(const BigInt& b, std::span<const BigInt> C,
                                          std::size_t node_budget = Budgets{}.nodes) {
    if (b < 2) throw std::invalid_argument("attractor base must be at least 2");
    if (C.empty()) throw std::invalid_argument("attractor digit set must be nonempty");
    const std::vector<BigInt> digits = detail::normalized_digits(C);
    const auto [lo, hi] = candidate_interval(b, digits);
    if (hi < lo) return {};
    const BigInt width = hi - lo + 1;
    if (width > node_budget) throw BudgetExceeded("node", node_budget);
    const auto n = width.convert_to<std::size_t>();

    std::vector<char> alive;
    if (detail::fits_machine_words(b, lo, n, digits)) {
        std::vector<std::int64_t> small;
        for (const BigInt& c : digits) small.push_back(c.convert_to<std::int64_t>());
        alive = detail::prune_candidates<std::int64_t>(b.convert_to<std::int64_t>(), lo.convert_to<std::int64_t>(),
                                                       n, small);
    } else {
        alive = detail::prune_candidates<BigInt>(b, lo, n, digits);
    }

    std::vector<BigInt> points;
    for (std::size_t i = 0; i < n; ++i) {
        if (alive[i]) points.push_back(lo + i);
    }
    return points;
}

inline AttractorSystem build_graph(const BigInt& b, std::span<const BigInt> C,
                                   std::size_t node_budget = Budgets{}.nodes) {
    AttractorSystem sys;
    sys.base = b;
    sys.nodes = integer_points(b, C, node_budget);
    sys.digits = detail::normalized_digits(C);
    std::tie(sys.candidate_lo, sys.candidate_hi) = candidate_interval(b, sys.digits);
    for (std::size_t i = 0; i < sys.nodes.size(); ++i) {
        const BigInt scaled = b * sys.nodes[i];
        for (const BigInt& c : sys.digits) {
            if (auto j = sys.index_of(scaled - c)) sys.edges.push_back({i, c, *j});
        }
    }
    return sys;
}

/// The least nonzero cycle by (length, start node, digit sequence), if any.
inline std::optional<CycleWitness> find_nonzero_cycle(const AttractorSystem& sys) {
    const std::size_t n = sys.nodes.size();
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    // eta-steps run against the graph edges: edge z --c--> w gives eta-step w --c--> z.
    struct Step {
        const BigInt* digit;
        std::size_t next;
    };
    std::vector<std::vector<Step>> forward(n), backward(n);
    for (const AttractorEdge& e : sys.edges) {
        if (sys.nodes[e.from] == 0 || sys.nodes[e.to] == 0) continue;
        forward[e.to].push_back({&e.digit, e.from});
        backward[e.from].push_back({&e.digit, e.to});
    }
    for (auto& steps : forward) {
        std::sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) { return *a.digit < *b.digit; });
    }

    auto bfs = [&](std::size_t source, const std::vector<std::vector<Step>>& adj) {
        std::vector<std::size_t> dist(n, kNone);
        std::deque<std::size_t> queue{source};
        dist[source] = 0;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (const Step& s : adj[u]) {
                if (dist[s.next] == kNone) {
                    dist[s.next] = dist[u] + 1;
                    queue.push_back(s.next);
                }
            }
        }
        return dist;
    };

    std::size_t best_len = kNone, best_start = kNone;
    for (std::size_t v = 0; v < n; ++v) {
        if (sys.nodes[v] == 0) continue;
        const auto dist = bfs(v, forward);
        std::size_t len = kNone;
        for (const Step& s : backward[v]) {
            // eta-step x -> v exists for each backward entry of v
            if (dist[s.next] != kNone) len = std::min(len, dist[s.next] + 1);
        }
        if (len < best_len) {
            best_len = len;
            best_start = v;
        }
    }
    if (best_start == kNone) return std::nullopt;

    // Greedy digit choice; a shortest closed walk is a simple cycle, so every
    // feasible successor needs exactly the remaining number of steps.
    const auto to_start = bfs(best_start, backward);
    CycleWitness witness;
    std::size_t current = best_start;
    for (std::size_t remaining = best_len; remaining > 0; --remaining) {
        const Step* chosen = nullptr;
        for (const Step& s : forward[current]) {
            if (to_start[s.next] == remaining - 1) {
                chosen = &s;
                break;
            }
        }
        if (chosen == nullptr) throw std::logic_error("cycle reconstruction failed");
        witness.nodes.push_back(sys.nodes[current]);
        witness.digits.push_back(*chosen->digit);
        current = chosen->next;
    }
    return witness;
}

/// First word (c_1..c_m), m <= max_len, not all zero, in (length, lexicographic)
/// order with (b^m - 1) | sum_j b^{j-1} c_j.
///
/// Exhaustive over C^m with a congruence bound on each prefix: a prefix is
/// dropped only when no completion of it can meet the divisibility.
inline std::optional<WordWitness> word_witness_search(const BigInt& b, std::span<const BigInt> C, std::size_t max_len,
                                                      std::size_t word_budget = Budgets{}.words) {
    if (b < 2) throw std::invalid_argument("word search base must be at least 2");
    if (C.empty()) throw std::invalid_argument("word search digit set must be nonempty");
    if (max_len < 1) throw std::invalid_argument("word search length must be at least 1");
    const std::vector<BigInt> digits = detail::normalized_digits(C);
    const BigInt& c_min = digits.front();
    const BigInt& c_max = digits.back();
    std::size_t visited = 0;

    for (std::size_t m = 1; m <= max_len; ++m) {
        const BigInt modulus = ipow(b, static_cast<unsigned>(m)) - 1;
        std::vector<BigInt> powers(m + 1);  // b^0 .. b^m
        powers[0] = 1;
        for (std::size_t i = 1; i <= m; ++i) powers[i] = powers[i - 1] * b;

        std::vector<std::size_t> choice(m, 0);
        std::vector<BigInt> partial(m + 1);  // partial[j] = sum_{i<j} b^i c_{i+1}
        partial[0] = 0;

        // A prefix of length j is extendable iff some X = -partial * b^{m-j} (mod b^m - 1)
        // lies in [c_min, c_max] * (b^{m-j} - 1)/(b - 1).
        auto extendable = [&](std::size_t j) {
            if (j == m) return mod_floor(partial[m], modulus) == 0;
            const BigInt geometric = (powers[m - j] - 1) / (b - 1);
            const BigInt x_lo = c_min * geometric;
            const BigInt x_hi = c_max * geometric;
            const BigInt x0 = mod_floor(-partial[j] * powers[m - j], modulus);
            const BigInt first = x0 + ceil_div(x_lo - x0, modulus) * modulus;
            return first <= x_hi;
        };

        std::size_t depth = 0;
        // Depth-first enumeration in lexicographic order of (c_1, ..., c_m).
        for (;;) {
            if (choice[depth] == digits.size()) {
                if (depth == 0) break;
                choice[depth] = 0;
                --depth;
                ++choice[depth];
                continue;
            }
            if (++visited > word_budget) throw BudgetExceeded("word", word_budget);
            partial[depth + 1] = partial[depth] + powers[depth] * digits[choice[depth]];
            if (!extendable(depth + 1)) {
                ++choice[depth];
                continue;
            }
            if (depth + 1 == m) {
                bool all_zero = true;
                for (std::size_t i = 0; i < m; ++i) all_zero = all_zero && digits[choice[i]] == 0;
                if (!all_zero) {
                    WordWitness w{m, {}};
                    for (std::size_t i = 0; i < m; ++i) w.word.push_back(digits[choice[i]]);
                    return w;
                }
                ++choice[depth];
                continue;
            }
            ++depth;
        }
    }
    return std::nullopt;
}

}  // namespace spectral
