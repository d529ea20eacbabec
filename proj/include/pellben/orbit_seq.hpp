#pragma once

#include <cstddef>
#include <vector>

#include "pellben/norm_class.hpp"
#include "pellben/pell_unit.hpp"
#include "pellben/quadint.hpp"

namespace pellben {

// The four canonical orbit sequences of a seed alpha with respect to a
// norm-1 element beta:
//   T1:  alpha * beta^n
//   T2:  alpha * conj(beta)^n
//   T3: -alpha * beta^n
//   T4: -alpha * conj(beta)^n
// indexed n = 1, 2, ... (the seed pair {alpha, -alpha} is not part of
// any variant).
enum class Variant { T1, T2, T3, T4 };

const char* variant_name(Variant v);     // "t1".."t4"
Variant variant_from_name(const std::string& name);

struct SequenceSpec {
    QuadInt alpha;  // seed of norm k
    QuadInt unit;   // norm-1 multiplier, not +-1 (hence |unit.x| >= 2)
    Variant variant;

    // Throws unless norm(unit) = 1, unit != +-1 and the radicands agree.
    void validate() const;
};

struct SequenceWindow {
    SequenceSpec spec;
    std::vector<QuadInt> terms;  // terms[i] holds index n = i + 1
};

// Materializes terms 1..n_terms. The first two terms come from exact
// multiplication; the rest from the order-2 recurrence
//   s_{n+2} = 2 u s_{n+1} - s_n,   t_{n+2} = 2 u t_{n+1} - t_n
// applied componentwise, where u = unit.x (conjugating beta does not
// change u, so all four variants share the coefficient).
SequenceWindow generate(const SequenceSpec& spec, std::size_t n_terms);

// Round-robin merge: output position k(n-1)+i (1-based) holds term n of
// sequence i. All inputs must have equal length.
std::vector<QuadInt> interleave(const std::vector<std::vector<QuadInt>>& seqs);
std::vector<QuadInt> interleave(const std::vector<SequenceWindow>& windows);

// The full norm-class enumeration: the 4 canonical windows of every
// orbit fundamental (partition order, variants T1..T4), interleaved.
// include_seeds additionally prepends alpha, -alpha per orbit. Throws
// "norm class empty" when the partition has no orbits.
std::vector<QuadInt> enumerate_norm_class(const Radicand& d, const BigInt& k,
                                          std::size_t n_terms, const FundamentalUnit& unit,
                                          bool include_seeds = false, int threads = 1);

// Guard for the Benford hypothesis on the characteristic polynomial
// x^2 - 2ux + 1 of the recurrence: true iff neither root u ± sqrt(u^2-1)
// is of the form ±10^m. For a valid norm-1 unit u^2 - 1 = D v^2 is never
// a perfect square, so the roots are irrational and the guard holds.
bool check_characteristic_roots(const QuadInt& unit);

}  // namespace pellben
