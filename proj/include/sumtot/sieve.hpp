// Smallest-prime-factor tables and the multiplicative functions built on them:
// Euler phi, Jordan totients J_v, Moebius mu, mu^2 and the divisor sum sigma.
//
// Values are exact. Pointwise evaluation and batch tables use 128-bit
// integers; a Jordan table is refused when N^v would not fit in 127 bits.
// Tables are immutable once built and may be shared between threads.

#pragma once

#include "sumtot/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sumtot {

using Int128 = __int128;

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

class SpfTable {
public:
    // Linear sieve over 2..limit. Throws CapacityError unless 2 <= limit <= 1e8.
    explicit SpfTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    // Smallest prime dividing k, for 2 <= k <= limit.
    std::uint32_t spf(std::uint64_t k) const;
    bool is_prime(std::uint64_t k) const { return k >= 2 && k <= limit_ && spf_[k] == k; }

    // Ascending primes up to limit.
    std::span<const std::uint32_t> primes() const { return primes_; }

    // Raw spf array indexed 0..limit (entries 0 and 1 are 0).
    std::span<const std::uint32_t> raw() const { return spf_; }

private:
    friend SpfTable load_spf_table(const std::filesystem::path& path);
    SpfTable(std::uint64_t limit, std::vector<std::uint32_t> spf);

    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

SpfTable build_spf(std::uint64_t limit);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

Factorization factorize(std::uint64_t k, const SpfTable& table);

struct FunctionKind {
    enum class Tag { EulerPhi, Jordan, Mobius, MobiusSquared, DivisorSigma };

    Tag tag = Tag::EulerPhi;
    unsigned order = 1; // Jordan order v >= 1; ignored otherwise

    static FunctionKind euler_phi() { return {Tag::EulerPhi, 1}; }
    static FunctionKind jordan(unsigned v);
    static FunctionKind mobius() { return {Tag::Mobius, 1}; }
    static FunctionKind mobius_squared() { return {Tag::MobiusSquared, 1}; }
    static FunctionKind divisor_sigma() { return {Tag::DivisorSigma, 1}; }

    std::string name() const;
};

// f(k) from the factorization of k. Overflow raises OverflowError.
Int128 eval(FunctionKind kind, std::uint64_t k, const SpfTable& table);

// f(1..N) by a linear sieve; element i holds f(i + 1).
std::vector<Int128> table(FunctionKind kind, std::uint64_t n);

// phi(0..N) as 32-bit values (index 0 unused); the bulk path for summation.
std::vector<std::uint32_t> phi_table(std::uint64_t n);

// Largest N for which a Jordan table of order v is accepted.
std::uint64_t jordan_capacity(unsigned v);

// (sum_{d|k} mu^2(d)/phi(d), k/phi(k)) as exact fractions.
std::pair<Rational, Rational> divisor_sum_identity(std::uint64_t k, const SpfTable& table);

// Cache format: "SPFT", u32 version, u64 N, then spf[0..N] as little-endian u32.
inline constexpr std::uint32_t kSpfDumpVersion = 1;
void save_spf_table(const SpfTable& table, const std::filesystem::path& path);
// Throws CacheError if the header is wrong or spot checks fail.
SpfTable load_spf_table(const std::filesystem::path& path);

std::string to_string(Int128 value);

} // namespace sumtot
