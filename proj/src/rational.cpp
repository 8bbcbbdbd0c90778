#include "pident/rational.hpp"

#include "pident/modular.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace pident {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < -INT64_MAX) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return {narrow(num), narrow(den)};
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        if (num == INT64_MIN || den == INT64_MIN) {
            throw std::overflow_error("rational arithmetic overflow");
        }
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ = narrow(static_cast<__int128>(num_) + o.num_);
        return *this;
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = make(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ = narrow(static_cast<__int128>(num_) * o.num_);
        return *this;
    }
    return *this = make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    return *this = make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') {
            s.remove_prefix(1);
        }
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return {parse_int(text)};
    }
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::uint32_t to_residue(const Rational& r, std::uint32_t p) {
    std::uint32_t den = reduce_signed(r.den(), p);
    if (den == 0) {
        throw std::domain_error("denominator " + std::to_string(r.den()) + " is not invertible mod " +
                                std::to_string(p));
    }
    return mul_mod(reduce_signed(r.num(), p), inv_mod(den, p), p);
}

}  // namespace pident
