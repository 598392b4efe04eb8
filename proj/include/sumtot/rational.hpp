#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sumtot {

// Exact fraction num/den with den > 0 and gcd(num, den) = 1.
// Intermediates go through 128-bit integers; a result that does not fit
// in 64 bits raises OverflowError.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    // Accepts "p", "p/q" and plain decimals such as "-1.5" or ".25" (read exactly).
    // Throws PreconditionError on anything else.
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace sumtot
