#pragma once

// Fourier analysis of the self-similar measure mu_{M,D}:
//   mask polynomial   m_D(x)  = (1/#D) sum_{d in D} e^{2 pi i d x}
//   Fourier transform mu^(xi) = prod_{k>=1} m_D(M^{-k} xi)
// plus the exact zero-set predicate and the Hadamard triple checks.

#include "spectral/bigint.hpp"
#include "spectral/errors.hpp"
#include "spectral/instance.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace spectral {

/// An exact frequency: a reduced rational with positive denominator.
class ExactFrequency {
public:
    ExactFrequency(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
    ExactFrequency(const BigInt& value) : value_(value) {}        // NOLINT(implicit)
    ExactFrequency(long long value) : value_(value) {}            // NOLINT(implicit)

    const Rational& value() const noexcept { return value_; }
    BigInt numerator() const { return numerator_of(value_); }
    BigInt denominator() const { return denominator_of(value_); }
    bool is_integer() const { return spectral::is_integer(value_); }

    bool operator==(const ExactFrequency&) const = default;

private:
    Rational value_;
};

namespace detail {

inline double frac(double x) { return x - std::floor(x); }

// (1/N) sum_{d=0}^{N-1} e^{2 pi i d theta}
inline std::complex<double> consecutive_mask(std::size_t N, double theta) {
    theta = frac(theta);
    std::complex<double> sum = 0.0;
    for (std::size_t d = 0; d < N; ++d) {
        const double angle = 2.0 * std::numbers::pi * frac(static_cast<double>(d) * theta);
        sum += std::polar(1.0, angle);
    }
    return sum / static_cast<double>(N);
}

// Shared zero-set decision on zeta = xi / c. Returns the level k with
// zeta in M^k * N^{e_j} * (Z \ NZ) for one of the offsets e_j, if any.
template <class Int>
std::optional<unsigned> zero_set_level_of_quotient(Int zeta, const Int& N, const Int& R, unsigned q,
                                                   const std::vector<unsigned>& offsets,
                                                   std::optional<unsigned> max_level) {
    if (zeta == 0) return std::nullopt;
    unsigned v = 0;
    while (zeta % N == 0) {
        zeta /= N;
        ++v;
    }
    for (unsigned e : offsets) {
        if (e > v || (v - e) % q != 0) continue;
        const unsigned k = (v - e) / q;
        if (max_level && k > *max_level) return std::nullopt;
        // Offsets are distinct and below q, so at most one passes the congruence.
        for (unsigned i = 0; i < k; ++i) {
            if (zeta % R != 0) return std::nullopt;
            zeta /= R;
        }
        return k;
    }
    return std::nullopt;
}

}  // namespace detail

/// m_D(x), evaluated as the product of the per-block consecutive-digit masks.
inline std::complex<double> mask_value(const ProblemInstance& inst, double x) {
    const auto N = inst.N().convert_to<std::size_t>();
    std::complex<double> value = 1.0;
    for (unsigned pj : inst.exponents()) {
        const double weight = ipow(inst.N(), pj).convert_to<double>();
        value *= detail::consecutive_mask(N, detail::frac(weight * x));
    }
    return value;
}

/// Number of factors K used by fourier_value for a frequency of magnitude |xi|.
inline unsigned fourier_truncation(const ProblemInstance& inst, double abs_xi, double tol) {
    const double M = inst.M().convert_to<double>();
    const double max_d = inst.D().back().convert_to<double>();
    double bound = 2.0 * std::numbers::pi * max_d * abs_xi / (M - 1.0);
    unsigned K = 1;
    bound /= M;
    while (!(bound < tol)) {
        bound /= M;
        ++K;
    }
    return K;
}

/// mu^(shift + xi) truncated after K factors so that the neglected tail
/// contributes less than tol (absolute error at most tol*e).
/// The integer shift is reduced exactly, so large spectrum elements keep
/// full phase accuracy.
inline std::complex<double> fourier_value(const ProblemInstance& inst, const BigInt& shift,
                                          double xi, double tol) {
    const double magnitude = std::abs(shift.convert_to<double>() + xi);
    const unsigned K = fourier_truncation(inst, magnitude, tol);
    const auto N = inst.N().convert_to<std::size_t>();

    std::vector<BigInt> weights;
    for (unsigned pj : inst.exponents()) weights.push_back(ipow(inst.N(), pj));

    std::complex<double> value = 1.0;
    BigInt Mk = 1;
    for (unsigned k = 1; k <= K; ++k) {
        Mk *= inst.M();
        const double Mk_d = Mk.convert_to<double>();
        for (const BigInt& w : weights) {
            double theta = detail::frac(w.convert_to<double>() * xi / Mk_d);
            if (shift != 0) {
                const BigInt r = mod_floor(w * shift, Mk);
                theta += r.convert_to<double>() / Mk_d;
            }
            value *= detail::consecutive_mask(N, theta);
        }
        if (value == 0.0) break;
    }
    return value;
}

inline std::complex<double> fourier_value(const ProblemInstance& inst, double xi, double tol = 1e-12) {
    return fourier_value(inst, BigInt(0), xi, tol);
}

/// Level k at which xi sits in the zero set
///   c * U_{k>=0} M^k ( U_j N^{p_s - p_j} (Z \ NZ) ),
/// or nullopt when xi is not a zero of mu^. `max_level` restricts k.
inline std::optional<unsigned> zero_set_level(const ProblemInstance& inst, const ExactFrequency& xi,
                                              std::optional<unsigned> max_level = std::nullopt) {
    if (!xi.is_integer()) return std::nullopt;
    const BigInt num = xi.numerator();
    if (num == 0 || num % inst.c() != 0) return std::nullopt;
    return detail::zero_set_level_of_quotient<BigInt>(num / inst.c(), inst.N(), inst.R(), inst.q(),
                                                       inst.zero_offsets(), max_level);
}

inline bool zero_set_contains(const ProblemInstance& inst, const ExactFrequency& xi) {
    return zero_set_level(inst, xi).has_value();
}

/// Zero-set membership for integer frequencies with a 64-bit fast path.
/// Built once per instance for bulk pairwise checks.
class ZeroSetTester {
public:
    explicit ZeroSetTester(const ProblemInstance& inst)
        : inst_(&inst), offsets_(inst.zero_offsets()) {
        small_ = fits_int64(inst.c()) && fits_int64(inst.N()) && fits_int64(inst.R());
        if (small_) {
            c_ = inst.c().convert_to<std::int64_t>();
            N_ = inst.N().convert_to<std::int64_t>();
            R_ = inst.R().convert_to<std::int64_t>();
        }
    }

    bool contains(const BigInt& xi) const {
        if (small_ && fits_int64(xi)) return contains(xi.convert_to<std::int64_t>());
        return zero_set_level(*inst_, xi).has_value();
    }

    bool contains(std::int64_t xi) const {
        if (!small_) return zero_set_level(*inst_, BigInt(xi)).has_value();
        if (xi == 0 || xi % c_ != 0) return false;
        return detail::zero_set_level_of_quotient<std::int64_t>(xi / c_, N_, R_, inst_->q(), offsets_,
                                                                std::nullopt)
            .has_value();
    }

private:
    const ProblemInstance* inst_;
    std::vector<unsigned> offsets_;
    bool small_ = false;
    std::int64_t c_ = 1, N_ = 2, R_ = 2;
};

/// Numeric unitarity test of H = (1/sqrt n)[e^{2 pi i d c / b}].
inline bool hadamard_check_numeric(const BigInt& b, std::span<const BigInt> digits,
                                   std::span<const BigInt> spectrum, double tol = 1e-9) {
    if (digits.size() != spectrum.size()) throw SizeMismatch();
    const std::size_t n = digits.size();
    const double b_d = b.convert_to<double>();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    std::vector<std::complex<double>> H(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt r = mod_floor(digits[i] * spectrum[j], b);
            H[i * n + j] = scale * std::polar(1.0, 2.0 * std::numbers::pi * (r.convert_to<double>() / b_d));
        }
    }
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) {
            std::complex<double> entry = 0.0;
            for (std::size_t i = 0; i < n; ++i) entry += std::conj(H[i * n + a]) * H[i * n + c];
            if (a == c) entry -= 1.0;
            worst = std::max(worst, std::abs(entry));
        }
    }
    return worst <= tol;
}

/// Exact test that (M^{-1} D, tL) is a compatible pair: every difference of
/// distinct elements of tL lies in the level-0 part of the zero set.
inline bool hadamard_check_exact(const ProblemInstance& inst, const BigInt& t) {
    if (t == 0) throw ZeroScaling();
    const auto& L = inst.L();
    for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            if (!zero_set_level(inst, BigInt(t * (L[j] - L[i])), 0u)) return false;
        }
    }
    return true;
}

}  // namespace spectral
