#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pellben/quadint.hpp"

namespace pellben {

// One full period of the continued fraction expansion of sqrt(D):
//   sqrt(D) = [a0; period repeated forever], period = (a_1, ..., a_L)
// with a_L = 2*a0 (classical palindromic termination).
struct CFExpansion {
    Radicand d;
    BigInt a0;
    std::vector<BigInt> period;
};

// Expands sqrt(D) by the PQa iteration
//   m_0 = 0, q_0 = 1,
//   a_j     = floor((a0 + m_j) / q_j),
//   m_{j+1} = a_j * q_j - m_j,
//   q_{j+1} = (D - m_{j+1}^2) / q_j,
// stopping when the state pair (m, q) returns to (m_1, q_1).
CFExpansion cf_sqrt(const Radicand& d);

// Numerator/denominator of the n-th convergent p_n/q_n, with the
// partial quotients extended periodically. gcd(p, q) = 1.
std::pair<BigInt, BigInt> convergent(const CFExpansion& cf, std::size_t n);

// The fundamental unit of Z(sqrt(D)): the norm-1 element x1 + y1*sqrt(D)
// with x1, y1 > 0 and (x1, y1) lexicographically minimal. When the CF
// period is odd, the end-of-period convergent has norm -1 and the unit
// is its square; that intermediate element is kept for callers that
// want it.
struct FundamentalUnit {
    QuadInt value;
    std::optional<QuadInt> norm_minus_one;
};

FundamentalUnit fundamental_unit(const Radicand& d);

}  // namespace pellben
