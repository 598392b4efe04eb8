// Riemann zeta and its derivatives for real s > 1, Euler products over primes
// with a rigorous tail estimate, and the numeric constants the bounds use.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace sumtot {

using Real = double;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(Real x)
    {
        const Real t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    CompensatedSum& operator+=(Real x)
    {
        add(x);
        return *this;
    }
    void merge(const CompensatedSum& other)
    {
        add(other.sum_);
        add(other.comp_);
    }
    Real value() const { return sum_ + comp_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
};

struct Constants {
    Real euler_gamma;  // 0.5772156649015329
    Real glaisher;     // A_GK, 15 digits
    Real robin_D;      // 0.6482, the rounded Robin constant
    Real rosser_const; // 2.50637
    Real beta;         // ln 3 - ln ln 3
    Real eta;          // robin_D e^-gamma / ln ln 3 - beta
    Real eta_rosser;   // same linearization with rosser_const in place of robin_D
};

const Constants& constants();

// The rounded eta printed alongside the Robin-type bound; used for side-by-side runs.
inline constexpr Real kRoundedEta = 2.8651;

// (7/3 - e^gamma ln ln 12) ln ln 12: the least D for which the Robin inequality
// holds at every k >= 3. Equality is attained at k = 12.
Real robin_constant_sharp();

// zeta(s), s > 1 + 1e-6. Direct sum below M = 1e5 plus an Euler-Maclaurin tail.
Real zeta(Real s);

// d^r zeta / ds^r at real s > 1 + 1e-3, 0 <= r <= 8.
Real zeta_deriv(unsigned r, Real s);

// zeta'(2) = zeta(2) (gamma + ln 2pi - 12 ln A_GK).
Real zeta_prime2_glaisher();

// prod_{r=1}^{|v|} zeta(s + r/2) for v <= -1, s > 1/2.
Real d_infinity(int v, Real s);

// Local factor p -> f(p) of an Euler product, stored as the deviation f(p) - 1 so that
// log f(p) is formed with log1p. decay_c and decay_alpha assert |f(p) - 1| <= c p^-alpha.
struct EulerProductSpec {
    std::string name;
    std::function<Real(std::uint64_t)> deviation;
    Real decay_alpha = 2;
    Real decay_c = 1;
    Real prefactor = 1;

    Real factor(std::uint64_t p) const { return 1 + deviation(p); }
};

struct EulerProductValue {
    Real value;
    Real tail_bound; // bound on |log(true / value)|

    Real lower() const;
    Real upper() const;
};

// prefactor * prod_{p <= prime_limit} f(p), prime_limit >= 1000.
EulerProductValue euler_product(const EulerProductSpec& spec, std::uint64_t prime_limit);

// Named products:
//   "g"          prod (1 + p^-2 (p-1)^-1)
//   "A(0,2)"     (1/3) prod (1 - 2/p^2 + 1/p^3)
//   "A(-v,v)"    prod (1 - (1/p)(1 - (1-1/p)^v))
//   "C(-v-s,v)"  prod (1 - p^-s (1 - (1-1/p)^v))   (zeta(s) prefactor left to the caller)
// Throws PreconditionError for unknown names or invalid v, s.
EulerProductSpec named_product(const std::string& name, int v = 0, Real s = 0);

// Ascending primes covering at least [2, limit], from a process-wide cache that only
// grows. The list may extend past limit.
std::shared_ptr<const std::vector<std::uint32_t>> primes_up_to(std::uint64_t limit);

} // namespace sumtot
