#include "sumtot/summatory.hpp"

#include "sumtot/errors.hpp"
#include "sumtot/sieve.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <thread>

namespace sumtot {

namespace {

double int_pow(double base, std::int64_t e)
{
    if (e < 0) return 1.0 / int_pow(base, -e);
    double result = 1.0;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

// k^u: exact powering for integer u, pow() otherwise.
class PowerOf {
public:
    explicit PowerOf(const Rational& u) : integer_(u.is_integer()), int_exp_(u.num()), real_exp_(u.to_double()) {}

    double operator()(double k) const { return integer_ ? int_pow(k, int_exp_) : std::pow(k, real_exp_); }

private:
    bool integer_;
    std::int64_t int_exp_;
    double real_exp_;
};

void validate_ladder(std::span<const std::uint64_t> ns)
{
    if (ns.empty()) throw PreconditionError("empty list of N");
    if (ns.front() < 1) throw PreconditionError("N must be positive");
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (ns[i] <= ns[i - 1]) throw PreconditionError("ladder must be strictly ascending");
    }
}

// Evaluates sum_{k in [lo, hi]} term(k), snapshotting at every checkpoint in range.
template <class Term>
struct Chunk {
    std::uint64_t lo;
    std::uint64_t hi;
    CompensatedSum total;
    std::vector<std::pair<std::size_t, CompensatedSum>> snapshots;

    void run(const Term& term, std::span<const std::uint64_t> ns)
    {
        auto next = std::lower_bound(ns.begin(), ns.end(), lo);
        for (std::uint64_t k = lo; k <= hi; ++k) {
            total += term(k);
            while (next != ns.end() && *next == k) {
                snapshots.emplace_back(static_cast<std::size_t>(next - ns.begin()), total);
                ++next;
            }
        }
    }
};

template <class Term>
std::vector<Real> partitioned_prefixes(const Term& term, std::span<const std::uint64_t> ns, unsigned threads)
{
    const std::uint64_t n = ns.back();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(n, 64))));

    std::vector<Chunk<Term>> chunks(threads);
    for (unsigned i = 0; i < threads; ++i) {
        chunks[i].lo = 1 + n * i / threads;
        chunks[i].hi = n * (i + 1) / threads;
    }
    if (threads == 1) {
        chunks[0].run(term, ns);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (auto& c : chunks) workers.emplace_back([&c, &term, ns] { c.run(term, ns); });
    }

    std::vector<Real> out(ns.size(), 0.0);
    CompensatedSum before;
    for (const auto& c : chunks) {
        for (const auto& [index, partial] : c.snapshots) {
            CompensatedSum acc = before;
            acc.merge(partial);
            out[index] = acc.value();
        }
        before.merge(c.total);
    }
    for (Real x : out) {
        if (!std::isfinite(x)) throw OverflowError("summatory value outside floating range");
    }
    return out;
}

double safe_term(double x)
{
    if (!std::isfinite(x)) throw OverflowError("summand outside floating range");
    return x;
}

} // namespace

std::string to_string(Regime r)
{
    switch (r) {
    case Regime::Polynomial: return "polynomial";
    case Regime::Logarithmic: return "logarithmic";
    case Regime::Convergent: return "convergent";
    }
    return "?";
}

Regime regime_from_string(const std::string& s)
{
    if (s == "polynomial") return Regime::Polynomial;
    if (s == "logarithmic") return Regime::Logarithmic;
    if (s == "convergent") return Regime::Convergent;
    throw PreconditionError("unknown regime '" + s + "'");
}

std::string to_string(SumKind k)
{
    return k == SumKind::Phi ? "phi" : "jordan";
}

Regime classify(const ExponentPair& e)
{
    switch (e.growth().sign()) {
    case 1: return Regime::Polynomial;
    case 0: return Regime::Logarithmic;
    default: return Regime::Convergent;
    }
}

std::vector<Real> summatory_prefixes(SumKind kind, const ExponentPair& e, std::span<const std::uint64_t> ns,
                                     SumOptions opts)
{
    validate_ladder(ns);
    const std::uint64_t n = ns.back();
    const PowerOf k_pow(e.u);

    if (kind == SumKind::Phi) {
        if (n > kMaxSieveLimit) throw CapacityError("N = " + std::to_string(n) + " exceeds sieve capacity");
        const std::vector<std::uint32_t> phi = phi_table(n);
        const std::int64_t v = e.v;
        auto term = [&](std::uint64_t k) {
            return safe_term(k_pow(static_cast<double>(k)) * int_pow(static_cast<double>(phi[k]), v));
        };
        return partitioned_prefixes(term, ns, opts.threads);
    }

    if (e.v < 1) throw PreconditionError("Jordan sums need order v >= 1");
    if (n > jordan_capacity(static_cast<unsigned>(e.v))) {
        throw CapacityError("N = " + std::to_string(n) + " exceeds J" + std::to_string(e.v) + " table capacity");
    }
    const std::vector<Int128> jordan = table(FunctionKind::jordan(static_cast<unsigned>(e.v)), n);
    auto term = [&](std::uint64_t k) {
        return safe_term(k_pow(static_cast<double>(k)) * static_cast<double>(jordan[k - 1]));
    };
    return partitioned_prefixes(term, ns, opts.threads);
}

Real summatory(SumKind kind, const ExponentPair& e, std::uint64_t n, SumOptions opts)
{
    const std::uint64_t ns[] = {n};
    return summatory_prefixes(kind, e, ns, opts).front();
}

Real normalize(const ExponentPair& e, std::uint64_t n, Real raw)
{
    const double nd = static_cast<double>(n);
    switch (classify(e)) {
    case Regime::Polynomial: {
        const Rational g = e.growth();
        const double scale = g.is_integer() ? int_pow(nd, g.num()) : std::pow(nd, g.to_double());
        return raw / scale;
    }
    case Regime::Logarithmic:
        if (n < 2) throw PreconditionError("logarithmic normalization needs N >= 2");
        return raw / std::log(nd);
    case Regime::Convergent: return raw;
    }
    return raw;
}

Real normalized(SumKind kind, const ExponentPair& e, std::uint64_t n, SumOptions opts)
{
    if (n < 2) throw PreconditionError("normalized sums need N >= 2");
    return normalize(e, n, summatory(kind, e, n, opts));
}

std::vector<std::uint64_t> default_ladder()
{
    return {10'000, 30'000, 100'000, 300'000, 1'000'000, 3'000'000, 10'000'000};
}

std::vector<std::uint64_t> quick_ladder()
{
    return {10'000, 30'000, 100'000, 300'000, 1'000'000};
}

ConvergenceEstimate ladder_estimate(SumKind kind, const ExponentPair& e, std::span<const std::uint64_t> ns,
                                    SumOptions opts)
{
    if (ns.size() < 4) throw PreconditionError("ladder needs at least 4 values of N");
    validate_ladder(ns);
    if (ns.front() < 2) throw PreconditionError("ladder values must be >= 2");

    const std::vector<Real> raw = summatory_prefixes(kind, e, ns, opts);
    ConvergenceEstimate est;
    est.regime = classify(e);
    for (std::size_t i = 0; i < ns.size(); ++i) est.ladder.push_back({ns[i], raw[i], normalize(e, ns[i], raw[i])});

    if (est.regime != Regime::Logarithmic) {
        est.limit_estimate = est.ladder.back().normalized;
        est.error_gauge = std::abs(est.ladder.back().normalized - est.ladder[est.ladder.size() - 2].normalized);
        return est;
    }

    // least squares F = a ln N + b
    const double count = static_cast<double>(ns.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& p : est.ladder) {
        mean_x += std::log(static_cast<double>(p.n));
        mean_y += p.raw;
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : est.ladder) {
        const double dx = std::log(static_cast<double>(p.n)) - mean_x;
        sxx += dx * dx;
        sxy += dx * (p.raw - mean_y);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    double worst = 0.0;
    for (const auto& p : est.ladder) {
        worst = std::max(worst, std::abs(p.raw - (slope * std::log(static_cast<double>(p.n)) + intercept)));
    }
    est.limit_estimate = slope;
    est.fit_intercept = intercept;
    est.error_gauge = worst / std::log(static_cast<double>(ns.back()));
    return est;
}

std::string ladder_csv(const ConvergenceEstimate& est)
{
    std::ostringstream out;
    out << "N,raw_sum,normalized,regime\n";
    char buf[64];
    for (const auto& p : est.ladder) {
        out << p.n << ',';
        std::snprintf(buf, sizeof buf, "%.10g", p.raw);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.10g", p.normalized);
        out << buf << ',' << to_string(est.regime) << '\n';
    }
    return out.str();
}

Real dn_multiple_sum(int v, Real s, std::uint64_t n)
{
    if (v > -1 || v < -3) throw PreconditionError("dn_multiple_sum supports v in {-1, -2, -3}");
    if (n < 1 || n > kMaxMultipleSumN) throw PreconditionError("dn_multiple_sum supports 1 <= N <= 2000");

    const std::vector<Int128> mu2 = table(FunctionKind::mobius_squared(), n);
    const std::vector<Int128> phi = table(FunctionKind::euler_phi(), n);
    const int depth = -v;

    auto level = [&](auto&& self, int j, std::uint64_t prefix) -> Real {
        CompensatedSum sum;
        for (std::uint64_t k = 1; prefix * k <= n; ++k) {
            const std::uint64_t q = prefix * k;
            if (mu2[q - 1] == 0) continue;
            const Real w = std::pow(static_cast<double>(k), -s) / static_cast<double>(phi[q - 1]);
            sum += (j == depth) ? w : w * self(self, j + 1, q);
        }
        return sum.value();
    };
    return level(level, 1, 1);
}

void require_convergent_negative(const ExponentPair& e)
{
    if (e.v >= 0) throw PreconditionError("needs v < 0");
    if (!(e.u + Rational(e.v) < Rational(-1))) throw PreconditionError("needs u + v < -1");
}

Real e_m_term(const ExponentPair& e, std::uint64_t k, std::uint64_t phi_k, Real eta, Real scale)
{
    const double kd = static_cast<double>(k);
    const int order = -e.v;
    const double exact = PowerOf(e.u)(kd) * int_pow(static_cast<double>(phi_k), e.v);
    const double coeff = int_pow(scale * std::exp(constants().euler_gamma), order);
    const double model = coeff * int_pow(eta + std::log(kd), order) * PowerOf(e.u + Rational(e.v))(kd);
    return exact - model;
}

Real e_m(const ExponentPair& e, std::uint64_t m, Real eta, Real scale)
{
    require_convergent_negative(e);
    if (m < 3) throw PreconditionError("E_m needs m >= 3");
    const std::vector<std::uint32_t> phi = phi_table(m - 1);
    CompensatedSum sum;
    for (std::uint64_t k = 1; k < m; ++k) sum += e_m_term(e, k, phi[k], eta, scale);
    return sum.value();
}

Real e_m(const ExponentPair& e, std::uint64_t m, Real eta)
{
    return e_m(e, m, eta, zeta(2.0));
}

} // namespace sumtot
