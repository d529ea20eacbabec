#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pellben/quadint.hpp"

namespace pellben {

// A block of m leading decimal digits d1..dm, d1 in 1..9 and the rest
// in 0..9. value() is the block read as an integer, e.g. (1,0) -> 10.
class DigitPattern {
public:
    explicit DigitPattern(std::vector<int> digits);
    static DigitPattern from_value(long value, int m);

    const std::vector<int>& digits() const { return digits_; }
    int length() const { return static_cast<int>(digits_.size()); }
    long value() const;
    std::string str() const;

    friend bool operator==(const DigitPattern& a, const DigitPattern& b) {
        return a.digits_ == b.digits_;
    }

private:
    std::vector<int> digits_;
};

// Benford probability of a leading digit block: log10(1 + 1/P) with
// P = pattern.value().
double expected_prob(const DigitPattern& pattern);

// Probability that the second significant digit equals d, marginalized
// over the first digit.
double second_digit_marginal(int d);

// First m decimal digits of |n|. Throws "zero term" for n = 0 and an
// error when |n| has fewer than m digits (callers filter short terms;
// orbit sequences outgrow any fixed m within a few steps).
DigitPattern leading_digits(const BigInt& n, int m);

// Fractional part of log10|n|, accurate to well below 1e-12. Computed
// from the digit count and a 17-digit prefix; the full big integer is
// never rounded to a double.
double log10_mantissa(const BigInt& n);

// Exact counts of leading digit blocks, keyed by block value.
struct DigitStats {
    int m = 1;
    std::map<long, long> counts;
    long total = 0;
};

DigitStats digit_frequencies(const std::vector<BigInt>& terms, int m);

// |{i : points[i] <= t}| / N for points in [0,1).
double empirical_density(const std::vector<double>& points, double t);

// Star discrepancy of a finite point set in [0,1): after sorting,
//   D*_N = max_i max(i/N - x_i, x_i - (i-1)/N).
double star_discrepancy(const std::vector<double>& points);

// Empirical digit statistics side by side with the Benford expectation,
// plus the mantissa equidistribution diagnostic.
struct BenfordReport {
    DigitStats stats;
    std::map<long, double> expected;  // every pattern of length m
    double max_abs_deviation = 0.0;
    double chi_square = 0.0;
    double star_discrepancy = 0.0;
    long total = 0;
};

BenfordReport benford_report(const std::vector<BigInt>& terms, int m);

}  // namespace pellben
