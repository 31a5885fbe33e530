#pragma once

// Problem instances: base N, cofactor R, exponent q and the exponent list p
// determine M = R*N^q and the product-form digit sets
//
//   D = {0..N-1} + N^{p_1}{0..N-1} + ... + N^{p_s}{0..N-1}
//   B = N^{p_s - p_j}{0..N-1} summed over j = 0..s      (p_0 = 0)
//   L = c*B,  c = R*N^{q - p_s - 1}
//
// (M, D, L) is a Hadamard triple and L generates the model spectrum.

#include "spectral/bigint.hpp"
#include "spectral/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace spectral {

struct InstanceLimits {
    std::size_t max_digits = 1'000'000;
};

class ProblemInstance {
public:
    const BigInt& N() const noexcept { return N_; }
    const BigInt& R() const noexcept { return R_; }
    unsigned q() const noexcept { return q_; }
    const std::vector<unsigned>& p() const noexcept { return p_; }
    std::size_t s() const noexcept { return p_.size(); }
    /// p_s, read as 0 when p is empty.
    unsigned p_top() const noexcept { return p_.empty() ? 0u : p_.back(); }

    const BigInt& M() const noexcept { return M_; }
    const BigInt& c() const noexcept { return c_; }
    const std::vector<BigInt>& D() const noexcept { return D_; }
    const std::vector<BigInt>& B() const noexcept { return B_; }
    const std::vector<BigInt>& L() const noexcept { return L_; }

    /// N^{s+1}, the common size of D, B and L.
    std::size_t digit_count() const noexcept { return D_.size(); }

    /// Exponents p_0 = 0, p_1, ..., p_s.
    std::vector<unsigned> exponents() const {
        std::vector<unsigned> e{0};
        e.insert(e.end(), p_.begin(), p_.end());
        return e;
    }

    /// The distinct N-adic offsets p_s - p_j, j = 0..s, in ascending order.
    std::vector<unsigned> zero_offsets() const {
        std::vector<unsigned> e;
        for (unsigned pj : exponents()) e.push_back(p_top() - pj);
        std::sort(e.begin(), e.end());
        return e;
    }

    bool operator==(const ProblemInstance& o) const {
        return N_ == o.N_ && R_ == o.R_ && q_ == o.q_ && p_ == o.p_;
    }

    friend ProblemInstance build_instance(const BigInt& N, const BigInt& R, long long q,
                                          const std::vector<long long>& p, InstanceLimits limits);

private:
    ProblemInstance() = default;

    BigInt N_, R_;
    unsigned q_ = 0;
    std::vector<unsigned> p_;
    BigInt M_, c_;
    std::vector<BigInt> D_, B_, L_;
};

namespace detail {

// Enumerates sum_j a_j * weights[j] over all digit vectors a in {0..N-1}^{#weights}.
inline std::vector<BigInt> mixed_radix_sums(std::size_t base, const std::vector<BigInt>& weights) {
    std::size_t count = 1;
    for (std::size_t j = 0; j < weights.size(); ++j) count *= base;
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t index = 0; index < count; ++index) {
        BigInt value = 0;
        std::size_t rest = index;
        for (const BigInt& w : weights) {
            value += w * static_cast<unsigned long long>(rest % base);
            rest /= base;
        }
        out.push_back(std::move(value));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline ProblemInstance build_instance(const BigInt& N, const BigInt& R, long long q,
                                      const std::vector<long long>& p,
                                      InstanceLimits limits = {}) {
    if (N < 2) throw InvalidParameters(InvalidReason::BaseTooSmall);
    if (R < 2) throw InvalidParameters(InvalidReason::CofactorTooSmall);
    if (gcd(R, N) != 1) throw InvalidParameters(InvalidReason::NotCoprime);
    if (q < 1) throw InvalidParameters(InvalidReason::ExponentTooSmall);
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] <= p[i - 1]) throw InvalidParameters(InvalidReason::NotIncreasing);
    }
    if (!p.empty() && p.front() <= 0) throw InvalidParameters(InvalidReason::FirstNotPositive);
    if (!p.empty() && p.back() >= q) throw InvalidParameters(InvalidReason::LastNotBelowQ);

    // Guard before any enumeration: N^{s+1} digits.
    if (ipow(N, static_cast<unsigned>(p.size() + 1)) > limits.max_digits)
        throw InvalidParameters(InvalidReason::TooManyDigits);

    ProblemInstance inst;
    inst.N_ = N;
    inst.R_ = R;
    inst.q_ = static_cast<unsigned>(q);
    for (long long pj : p) inst.p_.push_back(static_cast<unsigned>(pj));

    const unsigned ps = inst.p_top();
    inst.M_ = R * ipow(N, inst.q_);
    inst.c_ = R * ipow(N, inst.q_ - ps - 1);

    std::vector<BigInt> d_weights, b_weights;
    for (unsigned pj : inst.exponents()) {
        d_weights.push_back(ipow(N, pj));
        b_weights.push_back(ipow(N, ps - pj));
    }
    const auto base = N.convert_to<std::size_t>();
    inst.D_ = detail::mixed_radix_sums(base, d_weights);
    inst.B_ = detail::mixed_radix_sums(base, b_weights);
    inst.L_.reserve(inst.B_.size());
    for (const BigInt& b : inst.B_) inst.L_.push_back(inst.c_ * b);

    assert(std::adjacent_find(inst.D_.begin(), inst.D_.end()) == inst.D_.end());
    assert(std::adjacent_find(inst.B_.begin(), inst.B_.end()) == inst.B_.end());
    assert(inst.L_.back() < inst.M_);
    return inst;
}

}  // namespace spectral
