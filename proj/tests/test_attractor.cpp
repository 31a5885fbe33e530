#include "oracles.hpp"
#include "spectral/attractor.hpp"
#include "spectral/spectra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace spectral;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> values) { return {values.begin(), values.end()}; }

std::vector<BigInt> scaled_L(const ProblemInstance& inst, long long t) {
    std::vector<BigInt> out;
    for (const BigInt& l : inst.L()) out.push_back(t * l);
    return out;
}

void expect_valid_cycle(const CycleWitness& w, const BigInt& b, const AttractorSystem& sys) {
    ASSERT_GE(w.length(), 1u);
    ASSERT_EQ(w.nodes.size(), w.digits.size());
    EXPECT_TRUE(w.closes(b));
    for (std::size_t j = 0; j < w.length(); ++j) {
        const BigInt& eta = w.nodes[j];
        const BigInt& next = w.nodes[(j + 1) % w.length()];
        EXPECT_NE(eta, 0);
        EXPECT_EQ(eta + w.digits[j], b * next);
        EXPECT_TRUE(std::binary_search(sys.digits.begin(), sys.digits.end(), w.digits[j]));
        EXPECT_TRUE(sys.index_of(eta).has_value());
    }
}

}  // namespace

TEST(Attractor, CandidateInterval) {
    const auto C = ints({0, 33, 66, 99});
    const auto [lo, hi] = candidate_interval(12, C);
    EXPECT_EQ(lo, 0);
    EXPECT_EQ(hi, 9);
    const auto D = ints({-7, 5});
    const auto [lo2, hi2] = candidate_interval(4, D);
    EXPECT_EQ(lo2, -2);
    EXPECT_EQ(hi2, 1);
}

TEST(Attractor, IntegerPointsExamples) {
    EXPECT_EQ(integer_points(12, ints({0, 3, 6, 9})), ints({0}));
    EXPECT_EQ(integer_points(12, ints({0, 33, 66, 99})), ints({0, 3, 6, 9}));
    EXPECT_EQ(integer_points(2, ints({0, 1})), ints({0, 1}));
    EXPECT_EQ(integer_points(3, ints({0, 2})), ints({0, 1}));
}

TEST(Attractor, Errors) {
    EXPECT_THROW(integer_points(1, ints({0, 1})), std::invalid_argument);
    EXPECT_THROW(integer_points(2, {}), std::invalid_argument);
    EXPECT_THROW(integer_points(2, ints({0, 1000}), 10), BudgetExceeded);
    EXPECT_THROW(word_witness_search(2, ints({0, 1}), 0), std::invalid_argument);
    EXPECT_THROW(word_witness_search(12, ints({0, 3, 6, 9}), 30, 5), BudgetExceeded);
}

TEST(Attractor, GraphFor11L) {
    const auto sys = build_graph(12, ints({0, 33, 66, 99}));
    EXPECT_EQ(sys.nodes, ints({0, 3, 6, 9}));
    // Every node has a self-loop: 12z - c = z for c = 11z.
    for (const BigInt& z : sys.nodes) {
        const auto i = *sys.index_of(z);
        const bool loop = std::any_of(sys.edges.begin(), sys.edges.end(), [&](const AttractorEdge& e) {
            return e.from == i && e.to == i && e.digit == 11 * z;
        });
        EXPECT_TRUE(loop) << z;
    }
    for (const AttractorEdge& e : sys.edges) EXPECT_EQ(sys.nodes[e.to], 12 * sys.nodes[e.from] - e.digit);
}

TEST(Attractor, GraphForSignedBlock) {
    const auto inst = build_instance(2, 3, 2, {1});
    const auto block = block_digit_set(inst, SignWord{1, -1}, 1);
    const auto sys = build_graph(144, block);
    EXPECT_EQ(sys.nodes, ints({0}));
    EXPECT_FALSE(find_nonzero_cycle(sys).has_value());
}

TEST(Attractor, CycleExamples) {
    const std::vector<std::pair<long long, std::pair<long long, long long>>> cases{
        {11, {3, 33}}, {33, {9, 99}}, {55, {15, 165}}, {121, {33, 363}}};
    const auto inst = build_instance(2, 3, 2, {1});
    for (const auto& [t, expected] : cases) {
        const auto sys = build_graph(12, scaled_L(inst, t));
        const auto cycle = find_nonzero_cycle(sys);
        ASSERT_TRUE(cycle.has_value()) << t;
        EXPECT_EQ(cycle->nodes, ints({expected.first})) << t;
        EXPECT_EQ(cycle->digits, ints({expected.second})) << t;
        expect_valid_cycle(*cycle, 12, sys);
    }
    EXPECT_FALSE(find_nonzero_cycle(build_graph(12, inst.L())).has_value());
}

TEST(Attractor, LeastCycleOrdering) {
    // C = {0, 5}, b = 4: candidate 1 has successors 4 and -1, both outside.
    EXPECT_EQ(integer_points(4, ints({0, 5})), ints({0}));
    EXPECT_FALSE(find_nonzero_cycle(build_graph(4, ints({0, 5}))).has_value());
    // b = 3, C = {0, 4, 8}: 1 -> 3 -> 1 has length 2, but 2 and 4 carry self-loops.
    const auto sys = build_graph(3, ints({0, 4, 8}));
    const auto cycle = find_nonzero_cycle(sys);
    ASSERT_TRUE(cycle.has_value());
    expect_valid_cycle(*cycle, 3, sys);
    EXPECT_EQ(cycle->nodes, ints({2}));
    EXPECT_EQ(cycle->digits, ints({4}));
}

TEST(Attractor, WordExamples) {
    const auto w = word_witness_search(12, ints({0, 33, 66, 99}), 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->length, 1u);
    EXPECT_EQ(w->word, ints({33}));
    EXPECT_FALSE(word_witness_search(12, ints({0, 3, 6, 9}), 4).has_value());
}

TEST(AttractorProperties, PointsAreExactlyTheLongPathNodes) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const long long b = std::uniform_int_distribution<long long>(2, 9)(rng);
        const int size = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<BigInt> C;
        for (int i = 0; i < size; ++i) C.push_back(std::uniform_int_distribution<long long>(-40, 40)(rng));
        const auto points = integer_points(b, C);
        const auto [lo, hi] = candidate_interval(b, C);
        std::vector<BigInt> sorted_C(C.begin(), C.end());
        std::sort(sorted_C.begin(), sorted_C.end());
        sorted_C.erase(std::unique(sorted_C.begin(), sorted_C.end()), sorted_C.end());
        const std::size_t depth = hi >= lo ? (hi - lo + 1).convert_to<std::size_t>() + 1 : 1;
        std::vector<BigInt> brute;
        for (BigInt z = lo; z <= hi; ++z) {
            if (oracle::has_long_path(z, b, sorted_C, lo, hi, depth)) brute.push_back(z);
        }
        EXPECT_EQ(points, brute);

        // Closure: every point has a successor inside the set.
        for (const BigInt& z : points) {
            const bool ok = std::any_of(sorted_C.begin(), sorted_C.end(), [&](const BigInt& c) {
                return std::binary_search(points.begin(), points.end(), BigInt(b * z - c));
            });
            EXPECT_TRUE(ok);
        }
    }
}

TEST(AttractorProperties, CycleAndWordSearchesAgreeWithBruteForce) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const long long b = std::uniform_int_distribution<long long>(2, 7)(rng);
        const int size = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<BigInt> C{0};
        for (int i = 0; i < size; ++i) C.push_back(std::uniform_int_distribution<long long>(-30, 30)(rng));
        const auto sys = build_graph(b, C);
        const auto cycle = find_nonzero_cycle(sys);
        const std::size_t max_len = std::max<std::size_t>(1, std::min<std::size_t>(sys.nodes.size(), 6));
        const auto word = word_witness_search(b, C, max_len);
        const auto brute = oracle::first_word_brute(b, C, max_len);
        ASSERT_EQ(word.has_value(), brute.has_value());
        if (word) EXPECT_EQ(word->word, *brute);
        // With nonnegative digits no closed walk can pass through 0 and leave it,
        // so nonzero cycles and nonzero words must coincide.
        const bool nonnegative = std::all_of(C.begin(), C.end(), [](const BigInt& c) { return c >= 0; });
        if (nonnegative && sys.nodes.size() <= 6) EXPECT_EQ(cycle.has_value(), word.has_value());
        if (cycle) {
            expect_valid_cycle(*cycle, b, sys);
            EXPECT_TRUE(word_witness_search(b, C, cycle->length()).has_value());
        }
    }
}

TEST(AttractorProperties, BigIntPathMatchesMachinePath) {
    // Shift the digits by a large multiple of (b - 1): points shift by the same multiple.
    const BigInt shift = BigInt(1) << 70;
    const auto base_points = integer_points(5, ints({0, 7, 13}));
    std::vector<BigInt> moved{4 * shift, 7 + 4 * shift, 13 + 4 * shift};
    const auto points = integer_points(5, moved);
    ASSERT_EQ(points.size(), base_points.size());
    for (std::size_t i = 0; i < points.size(); ++i) EXPECT_EQ(points[i], base_points[i] + shift);
}
