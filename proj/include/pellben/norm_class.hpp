#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pellben/pell_unit.hpp"
#include "pellben/quadint.hpp"

namespace pellben {

// Inclusive search bounds for the fundamental solution of any orbit of
// x^2 - D y^2 = k: |u| <= u_max and 0 <= v <= v_max.
struct SearchBox {
    BigInt u_max;
    BigInt v_max;
};

// Bounds from the fundamental unit x1 + y1*sqrt(D), computed with exact
// integer inequalities (no floating point):
//   v_max = max { v : v^2 (2 x1 ± 2) <= y1^2 |k| }
//   u_max = max { u : 2 u^2 <= |k| (x1 ± 1) }
// with + for k > 0 and - for k < 0.
SearchBox search_bounds(const Radicand& d, const BigInt& k, const FundamentalUnit& unit);

// All u + v*sqrt(D) with 0 <= v <= v_max, |u| <= u_max and norm k,
// found by perfect-square testing k + D v^2 per v. Output is ordered by
// v ascending; within one v the positive root precedes the negative.
// threads > 1 splits the v range; the merge keeps the same order.
std::vector<QuadInt> solutions_in_box(const Radicand& d, const BigInt& k,
                                      const SearchBox& box, int threads = 1);

// Whether a and b lie in the same orbit of the unit-group action.
// Criterion: with common norm m, both (a.x b.x - D a.y b.y) / m and
// (a.x b.y - a.y b.x) / m must be integers. Throws when the norms
// differ or vanish.
bool associated(const QuadInt& a, const QuadInt& b);

struct OrbitFundamental {
    QuadInt value;
    bool ambiguous;  // orbit equals its own conjugate orbit
    std::optional<std::size_t> conjugate_partner;  // index of the conjugate orbit
};

struct OrbitPartition {
    Radicand d;
    BigInt k;
    std::vector<OrbitFundamental> fundamentals;  // empty <=> norm class empty
};

// Groups the box solutions into association classes and selects each
// class's unique fundamental solution: minimal v, and u >= 0 when both
// signs of u are present (ambiguous and degenerate v = 0 orbits).
OrbitPartition orbit_partition(const Radicand& d, const BigInt& k, int threads = 1);

// Index of the fundamental whose orbit contains a. Throws when a's norm
// differs from partition.k, or (internal inconsistency) when no
// fundamental matches.
std::size_t classify(const QuadInt& a, const OrbitPartition& partition);

}  // namespace pellben
