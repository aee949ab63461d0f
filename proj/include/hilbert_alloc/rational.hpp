#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace hilbert_alloc {

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    ExactRational(std::int64_t numerator, std::int64_t denominator);
    explicit ExactRational(const mpz_class& value);
    explicit ExactRational(mpq_class value);

    /// Accepts "p", "-p" or "p/q" with q > 0. Throws Error otherwise.
    static ExactRational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    /// "w a/q" mixed-number rendering; "0 1/3", "434 2/3", "322".
    std::string to_mixed_string() const;

    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);
    ExactRational& operator*=(const ExactRational& o);
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

} // namespace hilbert_alloc
