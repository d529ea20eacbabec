#include "pellben/norm_class.hpp"

#include <algorithm>
#include <thread>

namespace pellben {

SearchBox search_bounds(const Radicand& d, const BigInt& k, const FundamentalUnit& unit) {
    if (k == 0) {
        throw std::invalid_argument("search_bounds: k must be nonzero");
    }
    if (unit.value.d != d) {
        throw std::invalid_argument("radicand mismatch");
    }
    const BigInt& x1 = unit.value.x;
    const BigInt& y1 = unit.value.y;
    BigInt abs_k = abs(k);

    // 2 x1 + 2 for k > 0, 2 x1 - 2 for k < 0. x1 >= 2 always, so the
    // divisor stays positive.
    BigInt shift = (k > 0) ? BigInt(x1 + 1) : BigInt(x1 - 1);
    BigInt u_max = isqrt(BigInt(abs_k * shift / 2));
    BigInt v_max = isqrt(BigInt(y1 * y1 * abs_k / (2 * shift)));
    return SearchBox{std::move(u_max), std::move(v_max)};
}

namespace {

// Scans v in [v_lo, v_hi] and appends solutions in (v asc, +u before -u)
// order.
void scan_range(const Radicand& d, const BigInt& k, const BigInt& u_max,
                const BigInt& v_lo, const BigInt& v_hi, std::vector<QuadInt>& out) {
    const BigInt& dd = d.value();
    for (BigInt v = v_lo; v <= v_hi; ++v) {
        BigInt r = k + dd * v * v;
        if (r < 0 || !is_perfect_square(r)) {
            continue;
        }
        BigInt u = isqrt(r);
        if (u > u_max) {
            continue;
        }
        out.emplace_back(d, u, v);
        if (u != 0) {
            out.emplace_back(d, BigInt(-u), v);
        }
    }
}

}  // namespace

std::vector<QuadInt> solutions_in_box(const Radicand& d, const BigInt& k,
                                      const SearchBox& box, int threads) {
    std::vector<QuadInt> out;
    if (box.v_max < 0) {
        return out;
    }
    if (threads <= 1 || box.v_max < threads) {
        scan_range(d, k, box.u_max, 0, box.v_max, out);
        return out;
    }

    // Disjoint v chunks, merged back in chunk order so the result is
    // identical to the sequential scan.
    std::vector<std::vector<QuadInt>> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    BigInt total = box.v_max + 1;
    for (int t = 0; t < threads; ++t) {
        BigInt lo = total * t / threads;
        BigInt hi = total * (t + 1) / threads - 1;
        pool.emplace_back([&, t, lo, hi]() {
            scan_range(d, k, box.u_max, lo, hi, parts[static_cast<std::size_t>(t)]);
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& part : parts) {
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool associated(const QuadInt& a, const QuadInt& b) {
    if (a.d != b.d) {
        throw std::invalid_argument("radicand mismatch");
    }
    BigInt m = norm(a);
    if (m == 0) {
        throw std::invalid_argument("associated: zero norm");
    }
    if (m != norm(b)) {
        throw std::invalid_argument("associated: norm mismatch");
    }
    const BigInt& dd = a.d.value();
    BigInt first = a.x * b.x - dd * b.y * a.y;
    BigInt second = a.x * b.y - a.y * b.x;
    return mpz_divisible_p(first.get_mpz_t(), m.get_mpz_t()) &&
           mpz_divisible_p(second.get_mpz_t(), m.get_mpz_t());
}

OrbitPartition orbit_partition(const Radicand& d, const BigInt& k, int threads) {
    if (k == 0) {
        throw std::invalid_argument("orbit_partition: k must be nonzero");
    }
    FundamentalUnit unit = fundamental_unit(d);
    SearchBox box = search_bounds(d, k, unit);
    std::vector<QuadInt> sols = solutions_in_box(d, k, box, threads);

    // Association is an equivalence relation, so membership in a class
    // can be decided against any single representative.
    std::vector<std::vector<QuadInt>> classes;
    for (const QuadInt& sol : sols) {
        bool placed = false;
        for (auto& cls : classes) {
            if (associated(sol, cls.front())) {
                cls.push_back(sol);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({sol});
        }
    }

    OrbitPartition partition{d, k, {}};
    for (const auto& cls : classes) {
        // Unique fundamental solution: minimal v; if both signs of u
        // occur at that v (ambiguous orbit, or the degenerate v = 0 and
        // u = 0 cases) take u >= 0.
        const QuadInt* best = &cls.front();
        for (const QuadInt& member : cls) {
            if (member.y < best->y || (member.y == best->y && member.x > best->x)) {
                best = &member;
            }
        }
        partition.fundamentals.push_back(OrbitFundamental{*best, false, std::nullopt});
    }

    // Conjugate links; an orbit equal to its own conjugate orbit is
    // ambiguous. The conjugate of a norm class element stays in the
    // class, so the partner always exists.
    for (std::size_t i = 0; i < partition.fundamentals.size(); ++i) {
        QuadInt conj_i = conj(partition.fundamentals[i].value);
        bool found = false;
        for (std::size_t j = 0; j < partition.fundamentals.size(); ++j) {
            if (associated(conj_i, partition.fundamentals[j].value)) {
                partition.fundamentals[i].conjugate_partner = j;
                partition.fundamentals[i].ambiguous = (i == j);
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::logic_error("orbit_partition: conjugate orbit missing from partition");
        }
    }
    return partition;
}

std::size_t classify(const QuadInt& a, const OrbitPartition& partition) {
    if (a.d != partition.d) {
        throw std::invalid_argument("radicand mismatch");
    }
    if (norm(a) != partition.k) {
        throw std::invalid_argument("classify: element norm differs from partition k");
    }
    for (std::size_t i = 0; i < partition.fundamentals.size(); ++i) {
        if (associated(a, partition.fundamentals[i].value)) {
            return i;
        }
    }
    throw std::logic_error("classify: no matching orbit, partition incomplete");
}

}  // namespace pellben
