#pragma once

// Test-only oracles. Each one recomputes a quantity by an independent
// route (brute force, repeated multiplication, high-precision floats)
// so the production paths have something honest to be checked against.

#include <mpfr.h>

#include <utility>
#include <vector>

#include "pellben/orbit_seq.hpp"
#include "pellben/quadint.hpp"

namespace oracles {

using pellben::BigInt;
using pellben::QuadInt;
using pellben::Radicand;

// Smallest y >= 1 with 1 + d y^2 a perfect square. Linear scan; only
// usable for small d (d <= 50 keeps y <= 3588).
inline QuadInt brute_force_unit(const Radicand& d) {
    for (BigInt y = 1;; ++y) {
        BigInt t = 1 + d.value() * y * y;
        if (pellben::is_perfect_square(t)) {
            return QuadInt(d, pellben::isqrt(t), y);
        }
    }
}

// All (x, y) with x^2 - d y^2 = k, |x| <= bound, |y| <= bound, by
// exhaustive scan over the first quadrant plus sign flips.
inline std::vector<std::pair<long, long>> brute_force_solutions(long d, long k, long bound) {
    std::vector<std::pair<long, long>> found;
    for (long x = 0; x <= bound; ++x) {
        for (long y = 0; y <= bound; ++y) {
            if (x * x - d * y * y != k) {
                continue;
            }
            found.emplace_back(x, y);
            if (x != 0) {
                found.emplace_back(-x, y);
            }
            if (y != 0) {
                found.emplace_back(x, -y);
            }
            if (x != 0 && y != 0) {
                found.emplace_back(-x, -y);
            }
        }
    }
    return found;
}

// frac(log10 |n|) at 256-bit precision, rounded to double at the end.
inline double mantissa_mpfr(const BigInt& n) {
    mpfr_t t, fl;
    mpfr_init2(t, 256);
    mpfr_init2(fl, 256);
    mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDN);
    mpfr_abs(t, t, MPFR_RNDN);
    mpfr_log10(t, t, MPFR_RNDN);
    mpfr_floor(fl, t);
    mpfr_sub(t, t, fl, MPFR_RNDN);
    double result = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    mpfr_clear(fl);
    return result;
}

// Terms 1..n of a canonical orbit sequence by repeated multiplication,
// never touching the recurrence.
inline std::vector<QuadInt> direct_sequence(const QuadInt& alpha, const QuadInt& unit,
                                            pellben::Variant variant, std::size_t n) {
    using pellben::Variant;
    QuadInt beta = (variant == Variant::T2 || variant == Variant::T4) ? conj(unit) : unit;
    QuadInt seed = (variant == Variant::T3 || variant == Variant::T4) ? -alpha : alpha;
    std::vector<QuadInt> terms;
    terms.reserve(n);
    QuadInt current = seed;
    for (std::size_t i = 0; i < n; ++i) {
        current = mul(current, beta);
        terms.push_back(current);
    }
    return terms;
}

}  // namespace oracles
