#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace minforest {

/// Exact rational number. Always stored reduced with a positive denominator,
/// so equal values compare equal bitwise and serialize to identical strings.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    /// "p" for integers, "p/q" otherwise; q > 0, gcd(p,q)=1.
    std::string str() const;

    /// Accepts the same grammar str() emits, plus a leading '-'. No decimals.
    static std::optional<Rational> parse(std::string_view text);

    double to_double() const;

  private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Rational extended with a single +infinity, the weight of an empty
/// minimization. Subtracting infinity from anything is a domain error.
class ExtRational {
  public:
    constexpr ExtRational() : finite_(true), value_() {}
    ExtRational(Rational v) : finite_(true), value_(v) {}  // NOLINT(google-explicit-constructor)
    ExtRational(std::int64_t v) : finite_(true), value_(v) {}  // NOLINT(google-explicit-constructor)
    static ExtRational infinity();

    bool is_finite() const { return finite_; }
    /// Finite value; domain error on infinity.
    const Rational& finite() const;

    ExtRational operator+(const ExtRational& o) const;
    ExtRational operator-(const ExtRational& o) const;

    bool operator==(const ExtRational& o) const;
    bool operator<(const ExtRational& o) const;
    bool operator<=(const ExtRational& o) const { return *this < o || *this == o; }
    bool operator>(const ExtRational& o) const { return o < *this; }
    bool operator>=(const ExtRational& o) const { return o <= *this; }

    /// "inf" or Rational::str().
    std::string str() const;

  private:
    bool finite_;
    Rational value_;
};

}  // namespace minforest
