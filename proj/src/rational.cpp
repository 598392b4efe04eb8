#include "sumtot/rational.hpp"

#include "sumtot/errors.hpp"

#include <cctype>
#include <limits>

namespace sumtot {

namespace {

__int128 wide_gcd(__int128 a, __int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 x)
{
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

} // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den)) throw OverflowError("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::operator-() const
{
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    __int128 g = wide_gcd(a.den_, b.den_);
    __int128 bd = b.den_ / g;
    __int128 num = static_cast<__int128>(a.num_) * bd + static_cast<__int128>(b.num_) * (a.den_ / g);
    return Rational::from_wide(num, static_cast<__int128>(a.den_) * bd);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::string Rational::to_string() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text)
{
    auto fail = [&]() -> Rational { throw PreconditionError("cannot parse exact number '" + std::string(text) + "'"); };

    if (text.empty()) return fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational p = parse(text.substr(0, slash));
        Rational q = parse(text.substr(slash + 1));
        if (!p.is_integer() || !q.is_integer()) return fail();
        if (q.num() == 0) throw DomainError("rational with zero denominator");
        return p / q;
    }

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    __int128 num = 0;
    __int128 den = 1;
    bool seen_digit = false;
    bool seen_point = false;
    constexpr __int128 kLimit = static_cast<__int128>(1) << 100;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point) return fail();
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
        seen_digit = true;
        num = num * 10 + (c - '0');
        if (seen_point) den *= 10;
        if (num > kLimit || den > kLimit) throw OverflowError("too many digits in '" + std::string(text) + "'");
    }
    if (!seen_digit) return fail();
    return from_wide(negative ? -num : num, den);
}

} // namespace sumtot
