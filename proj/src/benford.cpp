#include "pellben/benford.hpp"

#include <algorithm>
#include <cmath>

namespace pellben {

DigitPattern::DigitPattern(std::vector<int> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw std::invalid_argument("digit pattern must be nonempty");
    }
    if (digits_.front() < 1 || digits_.front() > 9) {
        throw std::invalid_argument("leading digit must be in 1..9");
    }
    for (std::size_t j = 1; j < digits_.size(); ++j) {
        if (digits_[j] < 0 || digits_[j] > 9) {
            throw std::invalid_argument("digit out of range");
        }
    }
}

DigitPattern DigitPattern::from_value(long value, int m) {
    std::vector<int> digits(static_cast<std::size_t>(m));
    for (int j = m - 1; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] = static_cast<int>(value % 10);
        value /= 10;
    }
    if (value != 0) {
        throw std::invalid_argument("pattern value does not fit length");
    }
    return DigitPattern(std::move(digits));
}

long DigitPattern::value() const {
    long v = 0;
    for (int digit : digits_) {
        v = v * 10 + digit;
    }
    return v;
}

std::string DigitPattern::str() const {
    std::string s;
    for (int digit : digits_) {
        s.push_back(static_cast<char>('0' + digit));
    }
    return s;
}

double expected_prob(const DigitPattern& pattern) {
    return std::log10(1.0 + 1.0 / static_cast<double>(pattern.value()));
}

double second_digit_marginal(int d) {
    if (d < 0 || d > 9) {
        throw std::invalid_argument("second digit must be in 0..9");
    }
    double sum = 0.0;
    for (int d1 = 1; d1 <= 9; ++d1) {
        sum += expected_prob(DigitPattern({d1, d}));
    }
    return sum;
}

DigitPattern leading_digits(const BigInt& n, int m) {
    if (n == 0) {
        throw std::domain_error("zero term");
    }
    if (m < 1) {
        throw std::invalid_argument("pattern length must be positive");
    }
    std::string s = BigInt(abs(n)).get_str();
    if (s.size() < static_cast<std::size_t>(m)) {
        throw std::domain_error("term has fewer digits than the pattern length");
    }
    std::vector<int> digits(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        digits[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j)] - '0';
    }
    return DigitPattern(std::move(digits));
}

double log10_mantissa(const BigInt& n) {
    if (n == 0) {
        throw std::domain_error("zero term");
    }
    // |n| = prefix * 10^(L-l) * (1 + eps), 0 <= eps < 10^-(l-1), so
    // frac(log10|n|) = frac(log10(prefix)) up to ~4e-17 truncation error
    // plus double rounding in log10 (~4e-15), far inside the 1e-12
    // budget.
    std::string s = BigInt(abs(n)).get_str();
    const std::size_t prefix_len = std::min<std::size_t>(s.size(), 17);
    const long long prefix = std::stoll(s.substr(0, prefix_len));
    double lg = std::log10(static_cast<double>(prefix));
    double frac = lg - std::floor(lg);
    if (frac >= 1.0) {
        frac = 0.0;
    }
    return frac;
}

DigitStats digit_frequencies(const std::vector<BigInt>& terms, int m) {
    DigitStats stats;
    stats.m = m;
    for (const BigInt& term : terms) {
        ++stats.counts[leading_digits(term, m).value()];
    }
    stats.total = static_cast<long>(terms.size());
    return stats;
}

double empirical_density(const std::vector<double>& points, double t) {
    if (points.empty()) {
        throw std::invalid_argument("empirical_density: empty point set");
    }
    long hits = 0;
    for (double p : points) {
        if (p <= t) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(points.size());
}

double star_discrepancy(const std::vector<double>& points) {
    if (points.empty()) {
        throw std::invalid_argument("star_discrepancy: empty point set");
    }
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0.0 || sorted.back() >= 1.0) {
        throw std::invalid_argument("star_discrepancy: points must lie in [0,1)");
    }
    const double n = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double x = sorted[i];
        const double up = static_cast<double>(i + 1) / n - x;
        const double down = x - static_cast<double>(i) / n;
        worst = std::max(worst, std::max(up, down));
    }
    return worst;
}

BenfordReport benford_report(const std::vector<BigInt>& terms, int m) {
    if (terms.empty()) {
        throw std::invalid_argument("benford_report: empty sequence");
    }
    if (m < 1 || m > 9) {
        throw std::invalid_argument("benford_report: pattern length must be in 1..9");
    }
    BenfordReport report;
    report.stats = digit_frequencies(terms, m);
    report.total = report.stats.total;

    long lo = 1;
    for (int j = 1; j < m; ++j) {
        lo *= 10;
    }
    const double n = static_cast<double>(report.total);
    for (long pattern = lo; pattern < lo * 10; ++pattern) {
        const double expected = std::log10(1.0 + 1.0 / static_cast<double>(pattern));
        report.expected[pattern] = expected;
        auto it = report.stats.counts.find(pattern);
        const double count = (it == report.stats.counts.end())
                                 ? 0.0
                                 : static_cast<double>(it->second);
        report.max_abs_deviation = std::max(report.max_abs_deviation,
                                            std::abs(count / n - expected));
        const double model = n * expected;
        report.chi_square += (count - model) * (count - model) / model;
    }

    std::vector<double> mantissas;
    mantissas.reserve(terms.size());
    for (const BigInt& term : terms) {
        mantissas.push_back(log10_mantissa(term));
    }
    report.star_discrepancy = pellben::star_discrepancy(mantissas);
    return report;
}

}  // namespace pellben
