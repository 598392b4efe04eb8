// Brute-force reference implementations used only by tests. Nothing here
// touches the sieve code paths.

#pragma once

#include "sumtot/rational.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t k)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= k; ++d) {
        unsigned e = 0;
        while (k % d == 0) {
            k /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (k > 1) out.emplace_back(k, 1);
    return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t k)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= k; ++d) {
        if (k % d == 0) out.push_back(d);
    }
    return out;
}

// phi by counting residues coprime to k.
inline std::uint64_t phi_count(std::uint64_t k)
{
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= k; ++i) c += std::gcd(i, k) == 1;
    return c;
}

// phi by k prod (1 - 1/p) over trial-division primes.
inline std::uint64_t phi_trial(std::uint64_t k)
{
    std::uint64_t r = k;
    for (auto [p, e] : trial_factor(k)) r = r / p * (p - 1);
    return r;
}

inline int mu_trial(std::uint64_t k)
{
    int r = 1;
    for (auto [p, e] : trial_factor(k)) {
        if (e > 1) return 0;
        r = -r;
    }
    return r;
}

inline std::uint64_t sigma_divisors(std::uint64_t k)
{
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            s += d;
            if (d * d != k) s += k / d;
        }
    }
    return s;
}

// J_v(k) = sum_{d | k} mu(d) (k/d)^v.
inline __int128 jordan_divisor_form(std::uint64_t k, unsigned v)
{
    __int128 total = 0;
    for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        for (std::uint64_t dd : {d, k / d}) {
            __int128 pw = 1;
            for (unsigned i = 0; i < v; ++i) pw *= static_cast<__int128>(k / dd);
            total += mu_trial(dd) * pw;
            if (d * d == k) break;
        }
    }
    return total;
}

// sum k^u phi(k)^v in long double with trial-division phi.
inline long double naive_summatory(const sumtot::Rational& u, int v, std::uint64_t n)
{
    long double total = 0.0L;
    const long double ud = static_cast<long double>(u.num()) / static_cast<long double>(u.den());
    for (std::uint64_t k = 1; k <= n; ++k) {
        const long double kd = static_cast<long double>(k);
        const long double phi = static_cast<long double>(phi_trial(k));
        total += std::pow(kd, ud) * std::pow(phi, static_cast<long double>(v));
    }
    return total;
}

// sum_{k=1}^{n} k^-s in long double, smallest terms first.
inline long double power_sum(long double s, std::uint64_t n)
{
    long double total = 0.0L;
    for (std::uint64_t k = n; k >= 1; --k) total += std::pow(static_cast<long double>(k), -s);
    return total;
}

} // namespace oracle
