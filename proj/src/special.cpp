#include "sumtot/special.hpp"

#include "sumtot/errors.hpp"
#include "sumtot/sieve.hpp"

#include <algorithm>
#include <mutex>
#include <numbers>

namespace sumtot {

namespace {

// Bernoulli-number weights B_{2j}/(2j)! for the Euler-Maclaurin tail.
constexpr double kEmWeights[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};

// Derivatives of f(x) = (ln x)^r x^-s, kept as x^-t * sum_a c[a] (ln x)^a.
struct LogPowerTerm {
    std::vector<double> c;
    double t;

    LogPowerTerm(unsigned r, double s) : c(r + 1, 0.0), t(s) { c[r] = 1.0; }

    void differentiate()
    {
        std::vector<double> next(c.size(), 0.0);
        for (std::size_t a = 0; a < c.size(); ++a) {
            next[a] -= t * c[a];
            if (a > 0) next[a - 1] += static_cast<double>(a) * c[a];
        }
        c = std::move(next);
        t += 1.0;
    }

    double at(double x) const
    {
        const double l = std::log(x);
        double poly = 0.0;
        for (std::size_t a = c.size(); a-- > 0;) poly = poly * l + c[a];
        return poly * std::pow(x, -t);
    }
};

// sum_{k >= 1} (ln k)^r k^-s with the direct part below m.
struct DerivSeries {
    double value;
    double gauge;
};

DerivSeries log_power_series(unsigned r, double s, std::uint64_t m)
{
    CompensatedSum sum;
    for (std::uint64_t k = m - 1; k >= 2; --k) {
        const double l = std::log(static_cast<double>(k));
        sum += std::pow(l, static_cast<double>(r)) * std::pow(static_cast<double>(k), -s);
    }
    if (r == 0) sum += 1.0;

    // integral_M^inf (ln x)^r x^-s dx by I_j = L^j M^(1-s)/(s-1) + j/(s-1) I_{j-1}
    const double md = static_cast<double>(m);
    const double l = std::log(md);
    const double head = std::pow(md, 1.0 - s) / (s - 1.0);
    double integral = head;
    for (unsigned j = 1; j <= r; ++j) integral = std::pow(l, static_cast<double>(j)) * head + j / (s - 1.0) * integral;
    sum += integral;

    LogPowerTerm f(r, s);
    sum += 0.5 * f.at(md);
    f.differentiate();
    for (std::size_t j = 0; j + 1 < std::size(kEmWeights); ++j) {
        sum += -kEmWeights[j] * f.at(md);
        f.differentiate();
        f.differentiate();
    }
    const double gauge = std::abs(kEmWeights[std::size(kEmWeights) - 1] * f.at(md));
    return {sum.value(), gauge};
}

} // namespace

const Constants& constants()
{
    static const Constants c = [] {
        Constants k{};
        k.euler_gamma = 0.57721566490153286;
        k.glaisher = 1.28242712910062;
        k.robin_D = 0.6482;
        k.rosser_const = 2.50637;
        const double lnln3 = std::log(std::log(3.0));
        k.beta = std::log(3.0) - lnln3;
        k.eta = k.robin_D * std::exp(-k.euler_gamma) / lnln3 - k.beta;
        k.eta_rosser = k.rosser_const * std::exp(-k.euler_gamma) / lnln3 - k.beta;
        return k;
    }();
    return c;
}

Real robin_constant_sharp()
{
    const double lnln12 = std::log(std::log(12.0));
    return (7.0 / 3.0 - std::exp(constants().euler_gamma) * lnln12) * lnln12;
}

Real zeta(Real s)
{
    if (!(s > 1.0 + 1e-6)) throw DomainError("zeta(s) requires s > 1");
    constexpr std::uint64_t kM = 100000;
    CompensatedSum sum;
    for (std::uint64_t k = kM - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
    const double md = static_cast<double>(kM);
    const double ms = std::pow(md, -s);
    sum += md * ms / (s - 1.0);
    sum += 0.5 * ms;
    sum += s * ms / md / 12.0;
    return sum.value();
}

Real zeta_deriv(unsigned r, Real s)
{
    if (r > 8) throw PreconditionError("zeta derivative order above 8 is unsupported");
    if (!(s > 1.0 + 1e-3)) throw DomainError("zeta derivative requires s > 1.001");
    std::uint64_t m = 1000;
    DerivSeries series = log_power_series(r, s, m);
    while (series.gauge >= 1e-10 && m < 10'000'000) {
        m *= 4;
        series = log_power_series(r, s, m);
    }
    return (r % 2 == 0) ? series.value : -series.value;
}

Real zeta_prime2_glaisher()
{
    const auto& c = constants();
    return zeta(2.0) * (c.euler_gamma + std::log(2.0 * std::numbers::pi) - 12.0 * std::log(c.glaisher));
}

Real d_infinity(int v, Real s)
{
    if (v >= 0) throw PreconditionError("d_infinity needs v <= -1");
    if (!(s > 0.5)) throw DomainError("d_infinity needs s > 1/2");
    Real product = 1.0;
    for (int r = 1; r <= -v; ++r) product *= zeta(s + r / 2.0);
    return product;
}

Real EulerProductValue::lower() const
{
    return value * std::exp(-tail_bound);
}

Real EulerProductValue::upper() const
{
    return value * std::exp(tail_bound);
}

EulerProductValue euler_product(const EulerProductSpec& spec, std::uint64_t prime_limit)
{
    if (prime_limit < 1000) throw PreconditionError("euler_product needs prime_limit >= 1000");
    if (!(spec.decay_alpha > 1.0) || spec.decay_c < 0.0) throw PreconditionError("bad decay hypothesis for " + spec.name);

    const auto primes = primes_up_to(prime_limit);
    CompensatedSum log_sum;
    for (std::uint32_t p : *primes) {
        if (p > prime_limit) break;
        const double dev = spec.deviation(p);
        if (!(1.0 + dev > 0.0)) {
            throw DomainError(spec.name + ": non-positive local factor at p = " + std::to_string(p));
        }
        log_sum += std::log1p(dev);
    }

    const double big_p = static_cast<double>(prime_limit);
    const double edge = spec.decay_c * std::pow(big_p, -spec.decay_alpha);
    double tail = 0.0;
    if (spec.decay_c > 0.0) {
        tail = edge < 1.0 ? spec.decay_c * std::pow(big_p, 1.0 - spec.decay_alpha) / ((spec.decay_alpha - 1.0) * (1.0 - edge))
                          : std::numeric_limits<double>::infinity();
    }
    return {spec.prefactor * std::exp(log_sum.value()), tail};
}

EulerProductSpec named_product(const std::string& name, int v, Real s)
{
    // 1 - (1 - 1/p)^v without cancellation
    auto thinning = [](double p, int order) { return -std::expm1(order * std::log1p(-1.0 / p)); };

    if (name == "g") {
        return {name, [](std::uint64_t p) {
                    const double x = static_cast<double>(p);
                    return 1.0 / (x * x * (x - 1.0));
                },
                2.0, 1.0, 1.0};
    }
    if (name == "A(0,2)") {
        return {name, [](std::uint64_t p) {
                    const double x = static_cast<double>(p);
                    return (-2.0 + 1.0 / x) / (x * x);
                },
                2.0, 2.0, 1.0 / 3.0};
    }
    if (name == "A(-v,v)") {
        if (v < 1) throw PreconditionError("A(-v,v) needs v >= 1");
        return {name + "[v=" + std::to_string(v) + "]",
                [v, thinning](std::uint64_t p) {
                    const double x = static_cast<double>(p);
                    return -thinning(x, v) / x;
                },
                2.0, static_cast<double>(v), 1.0};
    }
    if (name == "C(-v-s,v)") {
        if (v < 1) throw PreconditionError("C(-v-s,v) needs v >= 1");
        if (!(s > 1.0)) throw PreconditionError("C(-v-s,v) needs s > 1");
        return {name + "[v=" + std::to_string(v) + ",s=" + std::to_string(s) + "]",
                [v, s, thinning](std::uint64_t p) {
                    const double x = static_cast<double>(p);
                    return -std::pow(x, -s) * thinning(x, v);
                },
                s + 1.0, static_cast<double>(v), 1.0};
    }
    throw PreconditionError("unknown product '" + name + "'");
}

std::shared_ptr<const std::vector<std::uint32_t>> primes_up_to(std::uint64_t limit)
{
    static std::mutex mutex;
    static std::shared_ptr<const std::vector<std::uint32_t>> cache;
    static std::uint64_t cached_limit = 0;

    std::lock_guard lock(mutex);
    if (!cache || cached_limit < limit) {
        const std::uint64_t target = std::min(kMaxSieveLimit, std::max({limit, 2 * cached_limit, std::uint64_t{1000}}));
        if (target < limit) throw CapacityError("prime cache limit exceeds sieve capacity");
        SpfTable t(target);
        cache = std::make_shared<const std::vector<std::uint32_t>>(t.primes().begin(), t.primes().end());
        cached_limit = target;
    }
    return cache;
}

} // namespace sumtot
