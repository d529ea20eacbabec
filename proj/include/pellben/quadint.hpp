#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace pellben {

using BigInt = mpz_class;

// Floor of the square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);

// True iff n is a perfect square (n >= 0 required only in spirit;
// negative n returns false).
bool is_perfect_square(const BigInt& n);

// The radicand D of a real quadratic ring Z(sqrt(D)): a positive
// integer, at least 2, that is not a perfect square. Validated at
// construction; everything downstream relies on it.
class Radicand {
public:
    explicit Radicand(BigInt d);

    const BigInt& value() const { return d_; }

    friend bool operator==(const Radicand& a, const Radicand& b) {
        return a.d_ == b.d_;
    }
    friend bool operator!=(const Radicand& a, const Radicand& b) {
        return !(a == b);
    }

private:
    BigInt d_;
};

// An element x + y*sqrt(D) of Z(sqrt(D)). Immutable value type; all
// arithmetic is exact.
struct QuadInt {
    Radicand d;
    BigInt x;
    BigInt y;

    QuadInt(Radicand rad, BigInt x_, BigInt y_)
        : d(std::move(rad)), x(std::move(x_)), y(std::move(y_)) {}

    // The ring identity 1 + 0*sqrt(D).
    static QuadInt one(const Radicand& rad) { return QuadInt(rad, 1, 0); }

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.d == b.d && a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const QuadInt& a, const QuadInt& b) {
        return !(a == b);
    }
};

// Product in Z(sqrt(D)). Throws std::invalid_argument("radicand
// mismatch") when the operands live in different rings.
QuadInt mul(const QuadInt& a, const QuadInt& b);

// Conjugate x - y*sqrt(D).
QuadInt conj(const QuadInt& a);

// Norm x^2 - D*y^2, the product of an element with its conjugate.
BigInt norm(const QuadInt& a);

// n-fold product by square-and-multiply; pow(a, 0) is the identity.
QuadInt pow(const QuadInt& a, unsigned long n);

inline QuadInt operator*(const QuadInt& a, const QuadInt& b) { return mul(a, b); }
inline QuadInt operator-(const QuadInt& a) {
    return QuadInt(a.d, BigInt(-a.x), BigInt(-a.y));
}

// Text form "x+y*sqrt(D)" with signed decimal components, e.g.
// "-8+1*sqrt(77)" or "13-1*sqrt(29)".
std::string to_string(const QuadInt& a);
QuadInt parse_quadint(const std::string& text);

}  // namespace pellben
