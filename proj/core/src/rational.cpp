#include "planecount/rational.hpp"

#include <limits>

namespace planecount {

namespace {

using int128 = __int128;

int128 abs128(int128 x) {
    return x < 0 ? -x : x;
}

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(int128 x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw RationalOverflowError("rational: value exceeds 64-bit range after reduction");
    return static_cast<long long>(x);
}

std::string to_string128(int128 x) {
    if (x == 0)
        return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1
                              : static_cast<unsigned __int128>(x);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace

Rational Rational::make_reduced(int128 num, int128 den) {
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

Rational::Rational(long long num, long long den) {
    *this = make_reduced(num, den);
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
        --q;
    return q;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<int128>(num_));
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(static_cast<int128>(num_) * o.den_ + static_cast<int128>(o.num_) * den_,
                        static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(static_cast<int128>(num_) * o.den_ - static_cast<int128>(o.num_) * den_,
                        static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(static_cast<int128>(num_) * o.num_,
                        static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0)
        throw std::invalid_argument("rational: division by zero");
    return make_reduced(static_cast<int128>(num_) * o.den_,
                        static_cast<int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    int128 lhs = static_cast<int128>(num_) * o.den_;
    int128 rhs = static_cast<int128>(o.num_) * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1)
        return to_string128(num_);
    return to_string128(num_) + "/" + to_string128(den_);
}

Rational Rational::from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> long long {
        if (t.empty())
            throw std::invalid_argument("rational: empty integer");
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '-' || t[0] == '+') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size())
            throw std::invalid_argument("rational: sign without digits");
        int128 value = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("rational: bad digit in \"" + std::string(t) + "\"");
            value = value * 10 + (t[i] - '0');
            if (value > static_cast<int128>(std::numeric_limits<long long>::max()) + 1)
                throw std::invalid_argument("rational: integer out of range");
        }
        return narrow(neg ? -value : value);
    };
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace planecount
