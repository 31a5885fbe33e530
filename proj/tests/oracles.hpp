#pragma once

// Test-only reference computations. Each one follows the defining formula
// directly and shares no code path with the library routine it checks.

#include "spectral/bigint.hpp"
#include "spectral/instance.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using spectral::BigInt;
using spectral::ProblemInstance;
using spectral::Rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// m_D(x) by direct summation over all of D.
inline std::complex<double> mask_direct(const ProblemInstance& inst, double x) {
    std::complex<double> sum = 0.0;
    for (const BigInt& d : inst.D()) {
        const double phase = d.convert_to<double>() * x;
        sum += std::polar(1.0, 2.0 * M_PI * (phase - std::floor(phase)));
    }
    return sum / static_cast<double>(inst.D().size());
}

/// |mu^(shift + xi)| from K factors of direct sums in 50-digit arithmetic.
/// Each phase d*(shift + xi)/M^k is reduced exactly in its integer part.
inline HighFloat fourier_abs_high(const ProblemInstance& inst, const BigInt& shift, double xi, unsigned K) {
    const HighFloat two_pi = 2 * boost::math::constants::pi<HighFloat>();
    HighFloat modulus = 1;
    BigInt Mk = 1;
    for (unsigned k = 1; k <= K; ++k) {
        Mk *= inst.M();
        const HighFloat Mk_f(Mk);
        HighFloat re = 0, im = 0;
        for (const BigInt& d : inst.D()) {
            BigInt r = (d * shift) % Mk;
            if (r < 0) r += Mk;
            HighFloat phase = HighFloat(r) / Mk_f + HighFloat(d) * HighFloat(xi) / Mk_f;
            phase -= floor(phase);
            re += cos(two_pi * phase);
            im += sin(two_pi * phase);
        }
        const HighFloat n(inst.D().size());
        modulus *= sqrt(re * re + im * im) / n;
        if (modulus == 0) break;
    }
    return modulus;
}

/// |mu^(shift + xi)| with long double direct sums; K chosen so the neglected
/// tail is below 1e-18.
inline long double fourier_abs_long(const ProblemInstance& inst, const BigInt& shift, double xi) {
    const long double two_pi = 6.283185307179586476925286766559L;
    const long double M = inst.M().convert_to<long double>();
    const long double magnitude = std::fabs(shift.convert_to<long double>() + xi) + 1.0L;
    const long double max_d = inst.D().back().convert_to<long double>();
    long double modulus = 1.0L;
    BigInt Mk = 1;
    long double tail = two_pi * max_d * magnitude;
    for (unsigned k = 1; tail > 1e-18L || k <= 2; ++k) {
        Mk *= inst.M();
        tail /= M;
        const long double Mk_f = Mk.convert_to<long double>();
        long double re = 0.0L, im = 0.0L;
        for (const BigInt& d : inst.D()) {
            BigInt r = (d * shift) % Mk;
            if (r < 0) r += Mk;
            long double phase = r.convert_to<long double>() / Mk_f + d.convert_to<long double>() * xi / Mk_f;
            phase -= std::floor(phase);
            re += std::cos(two_pi * phase);
            im += std::sin(two_pi * phase);
        }
        modulus *= std::sqrt(re * re + im * im) / static_cast<long double>(inst.D().size());
        if (modulus == 0.0L) break;
    }
    return modulus;
}

/// Zero-set membership by enumerating the union c * M^k * N^{p_s - p_j} * (Z \ NZ)
/// level by level; k ranges until c*M^k exceeds |xi|.
inline bool zero_set_by_enumeration(const ProblemInstance& inst, const Rational& xi) {
    if (spectral::denominator_of(xi) != 1) return false;
    const BigInt value = spectral::abs_value(spectral::numerator_of(xi));
    if (value == 0) return false;
    BigInt scale = inst.c();
    while (scale <= value) {
        for (unsigned pj : inst.exponents()) {
            const BigInt unit = scale * spectral::ipow(inst.N(), inst.p_top() - pj);
            if (value % unit == 0 && (value / unit) % inst.N() != 0) return true;
        }
        scale *= inst.M();
    }
    return false;
}

/// z is in T(b, C) ∩ Z iff a digit path of length `depth` stays in [lo, hi].
inline bool has_long_path(const BigInt& z, const BigInt& b, const std::vector<BigInt>& C, const BigInt& lo,
                          const BigInt& hi, std::size_t depth) {
    if (z < lo || z > hi) return false;
    if (depth == 0) return true;
    for (const BigInt& c : C) {
        if (has_long_path(b * z - c, b, C, lo, hi, depth - 1)) return true;
    }
    return false;
}

/// Plain enumeration of C^m, m = 1..max_len, in (length, lexicographic) order.
inline std::optional<std::vector<BigInt>> first_word_brute(const BigInt& b, std::vector<BigInt> C, std::size_t max_len) {
    std::sort(C.begin(), C.end());
    for (std::size_t m = 1; m <= max_len; ++m) {
        const BigInt modulus = spectral::ipow(b, static_cast<unsigned>(m)) - 1;
        std::vector<std::size_t> idx(m, 0);
        for (;;) {
            BigInt sum = 0, place = 1;
            bool all_zero = true;
            for (std::size_t i = 0; i < m; ++i) {
                sum += place * C[idx[i]];
                place *= b;
                all_zero = all_zero && C[idx[i]] == 0;
            }
            if (!all_zero && sum % modulus == 0) {
                std::vector<BigInt> word;
                for (std::size_t i = 0; i < m; ++i) word.push_back(C[idx[i]]);
                return word;
            }
            // odometer, last position fastest
            std::size_t pos = m;
            while (pos > 0) {
                --pos;
                if (++idx[pos] < C.size()) break;
                idx[pos] = 0;
                if (pos == 0) {
                    pos = m + 1;
                    break;
                }
            }
            if (pos == m + 1) break;
        }
    }
    return std::nullopt;
}

/// Spectrum truncation by nested loops over the digit vectors.
inline std::set<BigInt> spectrum_brute(const ProblemInstance& inst, const BigInt& t, unsigned k,
                                       const std::vector<int>& omega = {}) {
    std::set<BigInt> out;
    const std::size_t n = inst.L().size();
    std::size_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= n;
    for (std::size_t index = 0; index < total; ++index) {
        BigInt value = 0, place = 1;
        std::size_t rest = index;
        for (unsigned j = 0; j < k; ++j) {
            const int sign = omega.empty() ? 1 : omega[j % omega.size()];
            value += sign * place * inst.L()[rest % n];
            rest /= n;
            place *= inst.M();
        }
        out.insert(t * value);
    }
    return out;
}

}  // namespace oracle
