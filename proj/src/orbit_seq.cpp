#include "pellben/orbit_seq.hpp"

#include <string>

namespace pellben {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::T1: return "t1";
        case Variant::T2: return "t2";
        case Variant::T3: return "t3";
        case Variant::T4: return "t4";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "t1") return Variant::T1;
    if (name == "t2") return Variant::T2;
    if (name == "t3") return Variant::T3;
    if (name == "t4") return Variant::T4;
    throw std::invalid_argument("unknown variant '" + name + "' (expected t1|t2|t3|t4)");
}

void SequenceSpec::validate() const {
    if (alpha.d != unit.d) {
        throw std::invalid_argument("radicand mismatch");
    }
    if (norm(unit) != 1) {
        throw std::invalid_argument("sequence unit must have norm 1");
    }
    if (unit.y == 0) {
        throw std::invalid_argument("sequence unit must differ from 1 and -1");
    }
}

SequenceWindow generate(const SequenceSpec& spec, std::size_t n_terms) {
    spec.validate();
    if (n_terms == 0) {
        throw std::invalid_argument("generate: need at least one term");
    }

    const bool conjugated = (spec.variant == Variant::T2 || spec.variant == Variant::T4);
    const bool negated = (spec.variant == Variant::T3 || spec.variant == Variant::T4);
    QuadInt beta = conjugated ? conj(spec.unit) : spec.unit;
    QuadInt seed = negated ? -spec.alpha : spec.alpha;

    SequenceWindow window{spec, {}};
    window.terms.reserve(n_terms);
    window.terms.push_back(mul(seed, beta));
    if (n_terms >= 2) {
        window.terms.push_back(mul(window.terms.back(), beta));
    }

    const BigInt two_u = 2 * spec.unit.x;
    while (window.terms.size() < n_terms) {
        const QuadInt& prev = window.terms[window.terms.size() - 1];
        const QuadInt& prev2 = window.terms[window.terms.size() - 2];
        BigInt x = two_u * prev.x - prev2.x;
        BigInt y = two_u * prev.y - prev2.y;
        window.terms.emplace_back(spec.alpha.d, std::move(x), std::move(y));
    }
    return window;
}

std::vector<QuadInt> interleave(const std::vector<std::vector<QuadInt>>& seqs) {
    std::vector<QuadInt> merged;
    if (seqs.empty()) {
        return merged;
    }
    const std::size_t n = seqs.front().size();
    for (const auto& seq : seqs) {
        if (seq.size() != n) {
            throw std::invalid_argument("interleave: sequence length mismatch");
        }
    }
    merged.reserve(n * seqs.size());
    for (std::size_t term = 0; term < n; ++term) {
        for (const auto& seq : seqs) {
            merged.push_back(seq[term]);
        }
    }
    return merged;
}

std::vector<QuadInt> interleave(const std::vector<SequenceWindow>& windows) {
    std::vector<std::vector<QuadInt>> seqs;
    seqs.reserve(windows.size());
    for (const auto& w : windows) {
        seqs.push_back(w.terms);
    }
    return interleave(seqs);
}

std::vector<QuadInt> enumerate_norm_class(const Radicand& d, const BigInt& k,
                                          std::size_t n_terms, const FundamentalUnit& unit,
                                          bool include_seeds, int threads) {
    OrbitPartition partition = orbit_partition(d, k, threads);
    if (partition.fundamentals.empty()) {
        throw std::domain_error("norm class empty");
    }

    std::vector<std::vector<QuadInt>> windows;
    windows.reserve(partition.fundamentals.size() * 4);
    for (const auto& fund : partition.fundamentals) {
        for (Variant v : {Variant::T1, Variant::T2, Variant::T3, Variant::T4}) {
            windows.push_back(generate(SequenceSpec{fund.value, unit.value, v}, n_terms).terms);
        }
    }

    std::vector<QuadInt> result;
    if (include_seeds) {
        for (const auto& fund : partition.fundamentals) {
            result.push_back(fund.value);
            result.push_back(-fund.value);
        }
    }
    std::vector<QuadInt> merged = interleave(windows);
    result.insert(result.end(), merged.begin(), merged.end());
    return result;
}

namespace {

bool is_pm_power_of_ten(const BigInt& r) {
    BigInt a = abs(r);
    if (a == 0) {
        return false;
    }
    while (a % 10 == 0) {
        a /= 10;
    }
    return a == 1;
}

}  // namespace

bool check_characteristic_roots(const QuadInt& unit) {
    if (norm(unit) != 1 || unit.y == 0) {
        throw std::invalid_argument("check_characteristic_roots: not a norm-1 unit distinct from +-1");
    }
    BigInt disc = unit.x * unit.x - 1;
    if (!is_perfect_square(disc)) {
        // Irrational roots can never equal an integer power of ten.
        return true;
    }
    BigInt s = isqrt(disc);
    return !is_pm_power_of_ten(BigInt(unit.x + s)) && !is_pm_power_of_ten(BigInt(unit.x - s));
}

}  // namespace pellben
