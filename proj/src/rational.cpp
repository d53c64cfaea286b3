#include "rigidity/rational.hpp"

#include <limits>
#include <ostream>

namespace rigidity {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

std::int64_t Rational::to_integer() const {
    if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
    return num_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        std::size_t pos = 0;
        if (s.empty()) throw std::invalid_argument("bad rational '" + text + "'");
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad rational '" + text + "'");
        return v;
    };
    try {
        if (slash == std::string::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational out of range '" + text + "'");
    } catch (const std::domain_error&) {
        throw std::invalid_argument("bad rational '" + text + "'");
    }
}

Rational Rational::operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t r = 0;
        if (__builtin_add_overflow(num_, o.num_, &r)) throw std::overflow_error("rational overflow");
        num_ = r;
    } else if (den_ == o.den_) {
        *this = from_wide(static_cast<__int128>(num_) + o.num_, den_);
    } else {
        *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                          static_cast<__int128>(den_) * o.den_);
    }
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t r = 0;
        if (__builtin_mul_overflow(num_, o.num_, &r)) throw std::overflow_error("rational overflow");
        num_ = r;
        return *this;
    }
    *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace rigidity
