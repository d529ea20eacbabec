#include "pellben/quadint.hpp"

#include <cctype>
#include <sstream>

namespace pellben {

BigInt isqrt(const BigInt& n) {
    if (n < 0) {
        throw std::domain_error("isqrt: negative input");
    }
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) {
        return false;
    }
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Radicand::Radicand(BigInt d) : d_(std::move(d)) {
    if (d_ < 2) {
        throw std::domain_error("radicand must be at least 2");
    }
    if (is_perfect_square(d_)) {
        throw std::domain_error("radicand must not be a perfect square");
    }
}

QuadInt mul(const QuadInt& a, const QuadInt& b) {
    if (a.d != b.d) {
        throw std::invalid_argument("radicand mismatch");
    }
    const BigInt& dd = a.d.value();
    BigInt x = a.x * b.x + dd * a.y * b.y;
    BigInt y = a.x * b.y + a.y * b.x;
    return QuadInt(a.d, std::move(x), std::move(y));
}

QuadInt conj(const QuadInt& a) {
    return QuadInt(a.d, a.x, BigInt(-a.y));
}

BigInt norm(const QuadInt& a) {
    return a.x * a.x - a.d.value() * a.y * a.y;
}

QuadInt pow(const QuadInt& a, unsigned long n) {
    QuadInt result = QuadInt::one(a.d);
    QuadInt base = a;
    while (n > 0) {
        if (n & 1UL) {
            result = mul(result, base);
        }
        n >>= 1UL;
        if (n > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

std::string to_string(const QuadInt& a) {
    std::ostringstream os;
    os << a.x.get_str();
    if (a.y >= 0) {
        os << '+';
    }
    os << a.y.get_str() << "*sqrt(" << a.d.value().get_str() << ')';
    return os.str();
}

namespace {

// Reads a signed decimal integer starting at pos; advances pos. A
// leading '+' is accepted here but not forwarded (GMP rejects it).
BigInt read_integer(const std::string& s, std::size_t& pos) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = (s[pos] == '-');
        ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
    }
    if (pos == start) {
        throw std::invalid_argument("malformed quadratic integer: expected digits in '" + s + "'");
    }
    BigInt value(s.substr(start, pos - start));
    return negative ? BigInt(-value) : value;
}

}  // namespace

QuadInt parse_quadint(const std::string& text) {
    // Grammar: [sign] digits sign digits "*sqrt(" digits ")"
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    std::size_t pos = 0;
    BigInt x = read_integer(s, pos);
    if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) {
        throw std::invalid_argument("malformed quadratic integer: '" + text + "'");
    }
    BigInt y = read_integer(s, pos);
    const std::string marker = "*sqrt(";
    if (s.compare(pos, marker.size(), marker) != 0) {
        throw std::invalid_argument("malformed quadratic integer: '" + text + "'");
    }
    pos += marker.size();
    BigInt d = read_integer(s, pos);
    if (pos >= s.size() || s[pos] != ')' || pos + 1 != s.size()) {
        throw std::invalid_argument("malformed quadratic integer: '" + text + "'");
    }
    return QuadInt(Radicand(std::move(d)), std::move(x), std::move(y));
}

}  // namespace pellben
