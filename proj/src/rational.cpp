#include "minforest/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "minforest/errors.hpp"

namespace minforest {

namespace {

std::int64_t narrow(__int128 v, const char* op) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw ResourceError(std::string("rational overflow in ") + op);
    }
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(__int128 num, __int128 den, const char* op) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num, op), narrow(den, op));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    __int128 n = num_;
    __int128 d = den_;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n, "construction");
    den_ = narrow(d, "construction");
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return make_reduced(n, d, "addition");
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return make_reduced(n, d, "multiplication");
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string out = std::to_string(num_);
    if (den_ != 1) {
        out += '/';
        out += std::to_string(den_);
    }
    return out;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto parse_int = [](std::string_view s, std::int64_t& out) {
        if (s.empty()) return false;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        return ec == std::errc() && ptr == last;
    };
    std::size_t slash = text.find('/');
    std::int64_t num = 0;
    std::int64_t den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(text, num)) return std::nullopt;
    } else {
        if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den <= 0) return std::nullopt;
    }
    return Rational(num, den);
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

ExtRational ExtRational::infinity() {
    ExtRational r;
    r.finite_ = false;
    return r;
}

const Rational& ExtRational::finite() const {
    if (!finite_) throw DomainError("expected a finite weight");
    return value_;
}

ExtRational ExtRational::operator+(const ExtRational& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return ExtRational(value_ + o.value_);
}

ExtRational ExtRational::operator-(const ExtRational& o) const {
    if (!o.finite_) throw DomainError("cannot subtract infinity");
    if (!finite_) return infinity();
    return ExtRational(value_ - o.value_);
}

bool ExtRational::operator==(const ExtRational& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || value_ == o.value_;
}

bool ExtRational::operator<(const ExtRational& o) const {
    if (!finite_) return false;
    if (!o.finite_) return true;
    return value_ < o.value_;
}

std::string ExtRational::str() const { return finite_ ? value_.str() : "inf"; }

}  // namespace minforest
