#include "pellben/pell_unit.hpp"

namespace pellben {

CFExpansion cf_sqrt(const Radicand& d) {
    const BigInt& dd = d.value();
    BigInt a0 = isqrt(dd);

    // State after one step: (m_1, q_1). Since d is not a perfect square
    // every q_j >= 1, and the orbit of (m, q) is purely periodic from
    // index 1 onwards.
    BigInt m = a0;           // m_1 = a_0 * q_0 - m_0 = a0
    BigInt q = dd - a0 * a0; // q_1 = (d - m_1^2) / q_0
    const BigInt m1 = m;
    const BigInt q1 = q;

    std::vector<BigInt> period;
    while (true) {
        BigInt a = (a0 + m) / q;
        period.push_back(a);
        m = a * q - m;
        q = (dd - m * m) / q;
        if (m == m1 && q == q1) {
            break;
        }
    }

    if (period.back() != 2 * a0) {
        throw std::logic_error("cf_sqrt: period did not terminate with 2*a0");
    }
    return CFExpansion{d, std::move(a0), std::move(period)};
}

std::pair<BigInt, BigInt> convergent(const CFExpansion& cf, std::size_t n) {
    // p_j = a_j p_{j-1} + p_{j-2}, q_j likewise, seeded with the usual
    // virtual terms p_{-1}/q_{-1} = 1/0 and p_{-2}/q_{-2} = 0/1.
    BigInt p_prev = 1, p_prev2 = 0;
    BigInt q_prev = 0, q_prev2 = 1;
    const std::size_t len = cf.period.size();
    for (std::size_t j = 0; j <= n; ++j) {
        const BigInt& a = (j == 0) ? cf.a0 : cf.period[(j - 1) % len];
        BigInt p = a * p_prev + p_prev2;
        BigInt q = a * q_prev + q_prev2;
        p_prev2 = std::move(p_prev);
        q_prev2 = std::move(q_prev);
        p_prev = std::move(p);
        q_prev = std::move(q);
    }
    return {p_prev, q_prev};
}

FundamentalUnit fundamental_unit(const Radicand& d) {
    CFExpansion cf = cf_sqrt(d);
    auto [p, q] = convergent(cf, cf.period.size() - 1);
    QuadInt end(d, std::move(p), std::move(q));
    BigInt n = norm(end);
    if (n == 1) {
        return FundamentalUnit{std::move(end), std::nullopt};
    }
    if (n == -1) {
        // Odd period: the unit is the square of the norm -1 convergent.
        QuadInt unit = mul(end, end);
        return FundamentalUnit{std::move(unit), std::move(end)};
    }
    throw std::logic_error("fundamental_unit: end-of-period convergent has norm != +-1");
}

}  // namespace pellben
