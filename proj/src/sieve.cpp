#include "sumtot/sieve.hpp"

#include "sumtot/errors.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <random>

namespace sumtot {

namespace {

void check_limit(std::uint64_t n, std::uint64_t min)
{
    if (n < min || n > kMaxSieveLimit) {
        throw CapacityError("sieve limit " + std::to_string(n) + " outside [" + std::to_string(min) + ", " +
                            std::to_string(kMaxSieveLimit) + "]");
    }
}

Int128 checked_mul(Int128 a, Int128 b)
{
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in arithmetic function");
    return r;
}

Int128 checked_pow(Int128 base, unsigned e)
{
    Int128 r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

// Linear sieve: every composite is visited once, as i * p with p = spf(i * p).
std::vector<std::uint32_t> linear_spf(std::uint64_t limit, std::vector<std::uint32_t>& primes)
{
    std::vector<std::uint32_t> spf(limit + 1, 0);
    primes.clear();
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        const std::uint32_t si = spf[i];
        for (std::uint32_t p : primes) {
            if (p > si || i * p > limit) break;
            spf[i * p] = p;
        }
    }
    return spf;
}

Int128 prime_value(FunctionKind kind, std::uint64_t p)
{
    switch (kind.tag) {
    case FunctionKind::Tag::EulerPhi: return static_cast<Int128>(p) - 1;
    case FunctionKind::Tag::Jordan: return checked_pow(p, kind.order) - 1;
    case FunctionKind::Tag::Mobius: return -1;
    case FunctionKind::Tag::MobiusSquared: return 1;
    case FunctionKind::Tag::DivisorSigma: return static_cast<Int128>(p) + 1;
    }
    return 0;
}

// f(p^e) from f(p^(e-1)), e >= 2.
Int128 next_power_value(FunctionKind kind, Int128 previous, std::uint64_t p)
{
    switch (kind.tag) {
    case FunctionKind::Tag::EulerPhi: return checked_mul(previous, p);
    case FunctionKind::Tag::Jordan: return checked_mul(previous, checked_pow(p, kind.order));
    case FunctionKind::Tag::Mobius:
    case FunctionKind::Tag::MobiusSquared: return 0;
    case FunctionKind::Tag::DivisorSigma: return checked_mul(previous, p) + 1;
    }
    return 0;
}

void put_u32(std::ostream& out, std::uint32_t x)
{
    std::array<char, 4> b{};
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    out.write(b.data(), b.size());
}

void put_u64(std::ostream& out, std::uint64_t x)
{
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    out.write(b.data(), b.size());
}

template <class T>
T get_le(std::istream& in)
{
    std::array<unsigned char, sizeof(T)> b{};
    in.read(reinterpret_cast<char*>(b.data()), b.size());
    if (!in) throw CacheError("truncated spf cache");
    T x = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) x |= static_cast<T>(b[i]) << (8 * i);
    return x;
}

} // namespace

SpfTable::SpfTable(std::uint64_t limit) : limit_(limit)
{
    check_limit(limit, 2);
    spf_ = linear_spf(limit, primes_);
}

SpfTable::SpfTable(std::uint64_t limit, std::vector<std::uint32_t> spf) : limit_(limit), spf_(std::move(spf))
{
    for (std::uint64_t k = 2; k <= limit_; ++k) {
        if (spf_[k] == k) primes_.push_back(static_cast<std::uint32_t>(k));
    }
}

std::uint32_t SpfTable::spf(std::uint64_t k) const
{
    if (k < 2 || k > limit_) throw PreconditionError("spf index " + std::to_string(k) + " outside table");
    return spf_[k];
}

SpfTable build_spf(std::uint64_t limit)
{
    return SpfTable(limit);
}

Factorization factorize(std::uint64_t k, const SpfTable& table)
{
    if (k < 1 || k > table.limit()) {
        throw PreconditionError("cannot factorize " + std::to_string(k) + " with table limit " +
                                std::to_string(table.limit()));
    }
    Factorization out;
    while (k > 1) {
        std::uint64_t p = table.spf(k);
        unsigned e = 0;
        while (k % p == 0) {
            k /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return out;
}

FunctionKind FunctionKind::jordan(unsigned v)
{
    if (v < 1) throw PreconditionError("Jordan order must be >= 1");
    return {Tag::Jordan, v};
}

std::string FunctionKind::name() const
{
    switch (tag) {
    case Tag::EulerPhi: return "phi";
    case Tag::Jordan: return "J" + std::to_string(order);
    case Tag::Mobius: return "mu";
    case Tag::MobiusSquared: return "mu2";
    case Tag::DivisorSigma: return "sigma";
    }
    return "?";
}

Int128 eval(FunctionKind kind, std::uint64_t k, const SpfTable& table)
{
    Int128 value = 1;
    for (const auto& [p, e] : factorize(k, table)) {
        Int128 local = prime_value(kind, p);
        for (unsigned i = 1; i < e; ++i) local = next_power_value(kind, local, p);
        value = checked_mul(value, local);
    }
    return value;
}

std::uint64_t jordan_capacity(unsigned v)
{
    if (v < 1) throw PreconditionError("Jordan order must be >= 1");
    // largest n with n^v < 2^127
    auto fits = [v](std::uint64_t n) {
        Int128 r = 1;
        constexpr Int128 kBound = ~static_cast<unsigned __int128>(0) >> 1; // 2^127 - 1
        for (unsigned i = 0; i < v; ++i) {
            if (r > kBound / static_cast<Int128>(n)) return false;
            r *= n;
        }
        return true;
    };
    std::uint64_t lo = 1;
    std::uint64_t hi = kMaxSieveLimit;
    if (fits(hi)) return hi;
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        (fits(mid) ? lo : hi) = mid;
    }
    return lo;
}

std::vector<Int128> table(FunctionKind kind, std::uint64_t n)
{
    check_limit(n, 1);
    if (kind.tag == FunctionKind::Tag::Jordan && n > jordan_capacity(kind.order)) {
        throw CapacityError("J" + std::to_string(kind.order) + " table of size " + std::to_string(n) +
                            " would exceed 127 bits");
    }

    std::vector<Int128> values(n + 1, 0);
    values[1] = 1;
    if (n >= 2) {
        std::vector<std::uint32_t> primes;
        const std::vector<std::uint32_t> spf = linear_spf(n, primes);
        // power[k] = largest power of spf(k) dividing k
        std::vector<std::uint32_t> power(n + 1, 1);
        for (std::uint64_t k = 2; k <= n; ++k) {
            const std::uint32_t p = spf[k];
            const std::uint64_t q = k / p;
            power[k] = (q > 1 && spf[q] == p) ? power[q] * p : p;
            if (power[k] == k) {
                values[k] = (q == 1) ? prime_value(kind, p) : next_power_value(kind, values[q], p);
            } else {
                values[k] = values[k / power[k]] * values[power[k]];
            }
        }
    }
    values.erase(values.begin());
    return values;
}

std::vector<std::uint32_t> phi_table(std::uint64_t n)
{
    check_limit(n, 1);
    std::vector<std::uint32_t> phi(n + 1, 0);
    std::vector<std::uint32_t> primes;
    phi[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (phi[i] == 0) {
            phi[i] = static_cast<std::uint32_t>(i - 1);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t m = i * p;
            if (m > n) break;
            if (i % p == 0) {
                phi[m] = phi[i] * p;
                break;
            }
            phi[m] = phi[i] * (p - 1);
        }
    }
    return phi;
}

std::pair<Rational, Rational> divisor_sum_identity(std::uint64_t k, const SpfTable& table)
{
    const Factorization f = factorize(k, table);

    std::vector<std::uint64_t> divisors{1};
    for (const auto& [p, e] : f) {
        const std::size_t count = divisors.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * pk);
        }
    }

    Rational lhs = 0;
    for (std::uint64_t d : divisors) {
        const auto mu2 = static_cast<std::int64_t>(eval(FunctionKind::mobius_squared(), d, table));
        if (mu2 == 0) continue;
        const auto phi = static_cast<std::int64_t>(eval(FunctionKind::euler_phi(), d, table));
        lhs += Rational(mu2, phi);
    }
    const auto phi_k = static_cast<std::int64_t>(eval(FunctionKind::euler_phi(), k, table));
    return {lhs, Rational(static_cast<std::int64_t>(k), phi_k)};
}

void save_spf_table(const SpfTable& table, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write("SPFT", 4);
    put_u32(out, kSpfDumpVersion);
    put_u64(out, table.limit());
    for (std::uint32_t x : table.raw()) put_u32(out, x);
    if (!out) throw Error("write failed for " + path.string());
}

SpfTable load_spf_table(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open " + path.string());
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || std::string(magic.data(), magic.size()) != "SPFT") throw CacheError("bad magic in spf cache");
    if (get_le<std::uint32_t>(in) != kSpfDumpVersion) throw CacheError("unsupported spf cache version");
    const auto limit = get_le<std::uint64_t>(in);
    if (limit < 2 || limit > kMaxSieveLimit) throw CacheError("spf cache limit out of range");

    std::vector<std::uint32_t> spf(limit + 1);
    for (auto& x : spf) x = get_le<std::uint32_t>(in);
    if (in.peek() != std::char_traits<char>::eof()) throw CacheError("trailing bytes in spf cache");

    // Revalidate: spf[k] divides k and no smaller integer >= 2 does.
    auto valid = [&](std::uint64_t k) {
        const std::uint64_t p = spf[k];
        if (p < 2 || p > k || k % p != 0) return false;
        if (p * p > k && p != k) return false; // composite k has spf <= sqrt(k)
        for (std::uint64_t d = 2; d < p && d * d <= k; ++d) {
            if (k % d == 0) return false;
        }
        return true;
    };
    std::mt19937_64 rng(limit);
    std::uniform_int_distribution<std::uint64_t> pick(2, limit);
    for (std::uint64_t k = 2; k <= std::min<std::uint64_t>(limit, 1000); ++k) {
        if (!valid(k)) throw CacheError("spf cache failed spot check at " + std::to_string(k));
    }
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t k = pick(rng);
        if (!valid(k)) throw CacheError("spf cache failed spot check at " + std::to_string(k));
    }
    return SpfTable(limit, std::move(spf));
}

std::string to_string(Int128 value)
{
    if (value == 0) return "0";
    const bool negative = value < 0;
    unsigned __int128 x = negative ? -static_cast<unsigned __int128>(value) : static_cast<unsigned __int128>(value);
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    if (negative) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace sumtot
