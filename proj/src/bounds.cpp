#include "sumtot/bounds.hpp"

#include "sumtot/errors.hpp"
#include "sumtot/sieve.hpp"

#include <cmath>
#include <numbers>

namespace sumtot {

namespace {

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// -u-v as a double; the convergent-regime zeta argument.
double tail_exponent(const ExponentPair& e)
{
    return -(e.u + Rational(e.v)).to_double();
}

void require_positive_order(const ExponentPair& e)
{
    if (e.v < 1) throw PreconditionError("bound needs v >= 1");
}

void require_negative_order(const ExponentPair& e)
{
    if (e.v > -1) throw PreconditionError("bound needs v <= -1");
}

// The shared value of jordan_exact and lemma1_upper.
double jordan_limit(const ExponentPair& e)
{
    require_positive_order(e);
    const double zv = zeta(e.v + 1.0);
    switch (classify(e)) {
    case Regime::Polynomial: return 1.0 / (e.growth().to_double() * zv);
    case Regime::Logarithmic: return 1.0 / zv;
    case Regime::Convergent: {
        const double minus_u = -e.u.to_double();
        if (!(Rational(-1) * e.u > Rational(1))) throw PreconditionError("convergent Jordan limit needs -u > 1");
        return zeta(tail_exponent(e)) / zeta(minus_u);
    }
    }
    return 0.0;
}

} // namespace

std::string to_string(BoundSide s)
{
    switch (s) {
    case BoundSide::Lower: return "lower";
    case BoundSide::Upper: return "upper";
    case BoundSide::Exact: return "exact";
    }
    return "?";
}

std::string to_string(RobinVariant v)
{
    return v == RobinVariant::PhiSigma ? "phi-sigma" : "rosser-schoenfeld";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Sandwiched: return "sandwiched";
    case Verdict::LowerViolated: return "lower-violated";
    case Verdict::UpperViolated: return "upper-violated";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

BoundValue jordan_exact(const ExponentPair& e)
{
    BoundValue b{"Jordan-exact", jordan_limit(e), BoundSide::Exact, "jordan-totient limit", {}};
    b.params.applies_to = "jordan";
    return b;
}

BoundValue lemma1_upper(const ExponentPair& e)
{
    return {"Lemma1-upper", jordan_limit(e), e.v == 1 ? BoundSide::Exact : BoundSide::Upper,
            "phi^v <= J_v", {}};
}

BoundValue lemma2_lower(const ExponentPair& e)
{
    require_negative_order(e);
    double value = 1.0;
    switch (classify(e)) {
    case Regime::Polynomial: value = 1.0 / e.growth().to_double(); break;
    case Regime::Logarithmic: value = 1.0; break;
    case Regime::Convergent: value = zeta(tail_exponent(e)); break;
    }
    return {"Lemma2-lower", value, BoundSide::Lower, "(1-1/p)^-|v| > 1", {}};
}

BoundValue lemma3_upper(const ExponentPair& e)
{
    require_negative_order(e);
    const double factor = std::pow(2.0, -e.v / 2.0);
    double value = 0.0;
    switch (classify(e)) {
    case Regime::Polynomial: value = factor * d_infinity(e.v, 1.0) / e.growth().to_double(); break;
    case Regime::Logarithmic: value = factor * d_infinity(e.v, 1.0); break;
    case Regime::Convergent: {
        const double s = tail_exponent(e);
        value = factor * d_infinity(e.v, s) * zeta(s);
        break;
    }
    }
    return {"Lemma3-upper", value, BoundSide::Upper, "sqrt2 phi(k) >= sqrt k, nested sum", {}};
}

Real refined_d_bound(Real s)
{
    return std::pow(2.0, -s) * (1.0 - 1.0 / std::numbers::sqrt2) +
           std::pow(6.0, -s) * (0.5 - 1.0 / std::sqrt(6.0)) + zeta(s + 0.5);
}

BoundValue refined_vminus1_upper(const ExponentPair& e)
{
    if (e.v != -1) throw PreconditionError("refined bound needs v = -1");
    double value = 0.0;
    switch (classify(e)) {
    case Regime::Polynomial: value = refined_d_bound(1.0) / e.growth().to_double(); break;
    case Regime::Logarithmic: value = refined_d_bound(1.0); break;
    case Regime::Convergent: {
        const double s = tail_exponent(e);
        value = refined_d_bound(s) * zeta(s);
        break;
    }
    }
    return {"Refined-v=-1", value, BoundSide::Upper, "phi(k) >= sqrt k except k = 2, 6", {}};
}

Real robin_closed_form(const ExponentPair& e, Real eta, Real scale)
{
    require_convergent_negative(e);
    const int order = -e.v;
    const double s = tail_exponent(e);
    CompensatedSum sum;
    for (int r = 0; r <= order; ++r) {
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(order, r) * std::pow(eta, order - r) * zeta_deriv(static_cast<unsigned>(r), s);
    }
    return std::pow(scale * std::exp(constants().euler_gamma), order) * sum.value();
}

BoundValue robin_upper(const ExponentPair& e, std::uint64_t m, RobinVariant variant, std::optional<Real> eta)
{
    require_convergent_negative(e);
    const bool phi_sigma = variant == RobinVariant::PhiSigma;
    const double used_eta = eta.value_or(phi_sigma ? constants().eta : constants().eta_rosser);
    const double scale = phi_sigma ? zeta(2.0) : 1.0;

    BoundValue b{"RobinTheorem", e_m(e, m, used_eta, scale) + robin_closed_form(e, used_eta, scale),
                 BoundSide::Upper, phi_sigma ? "robin sigma bound with phi*sigma > k^2/zeta(2)" : "rosser-schoenfeld k/phi bound",
                 {}};
    b.params.m = m;
    b.params.eta = used_eta;
    b.params.variant = to_string(variant);
    return b;
}

std::optional<std::uint64_t> crossover_m(const ExponentPair& e, Real target, std::uint64_t m_max,
                                         std::optional<Real> eta)
{
    require_convergent_negative(e);
    if (!(target > 0.0)) throw PreconditionError("crossover target must be positive");
    if (m_max < 3 || m_max > kMaxCrossoverM) throw PreconditionError("crossover m_max must lie in [3, 10000]");

    const double used_eta = eta.value_or(constants().eta);
    const double scale = zeta(2.0);
    const double closed = robin_closed_form(e, used_eta, scale);
    const double divisor = zeta(tail_exponent(e));
    const std::vector<std::uint32_t> phi = phi_table(m_max);

    CompensatedSum em;
    em += e_m_term(e, 1, phi[1], used_eta, scale);
    for (std::uint64_t m = 3; m <= m_max; ++m) {
        em += e_m_term(e, m - 1, phi[m - 1], used_eta, scale);
        if ((em.value() + closed) / divisor < target) return m;
    }
    return std::nullopt;
}

Verdict judge(const std::vector<BoundValue>& bounds, const ConvergenceEstimate& empirical)
{
    const double x = empirical.limit_estimate;
    const double gauge = empirical.error_gauge;
    bool clear = true;
    for (const auto& b : bounds) {
        if (!b.applies_to_phi()) continue;
        switch (b.side) {
        case BoundSide::Lower:
            if (x < b.value - (gauge + kViolationSlack)) return Verdict::LowerViolated;
            if (!(x - gauge > b.value)) clear = false;
            break;
        case BoundSide::Upper:
            if (x > b.value + gauge + kViolationSlack) return Verdict::UpperViolated;
            if (!(x + gauge < b.value)) clear = false;
            break;
        case BoundSide::Exact:
            if (std::abs(x - b.value) > gauge + kExactAgreement) {
                return x > b.value ? Verdict::UpperViolated : Verdict::LowerViolated;
            }
            break;
        }
    }
    return clear ? Verdict::Sandwiched : Verdict::Inconclusive;
}

BoundReport full_report(const ExponentPair& e, const ReportOptions& opts)
{
    BoundReport report;
    report.exponents = e;
    report.regime = classify(e);

    auto try_add = [&](auto&& make) {
        try {
            report.bounds.push_back(make());
        } catch (const DomainError&) {
            // outside the numerical domain of this bound (e.g. -u-v too close to 1)
        }
    };

    if (e.v >= 1) {
        try_add([&] { return lemma1_upper(e); });
        try_add([&] { return jordan_exact(e); });
    } else if (e.v == 0) {
        try_add([&] {
            double value = 1.0;
            if (report.regime == Regime::Polynomial) value = 1.0 / e.growth().to_double();
            if (report.regime == Regime::Convergent) value = zeta(-e.u.to_double());
            return BoundValue{"PowerSum-exact", value, BoundSide::Exact, "sum of k^u", {}};
        });
    } else {
        try_add([&] { return lemma2_lower(e); });
        try_add([&] { return lemma3_upper(e); });
        if (e.v == -1) try_add([&] { return refined_vminus1_upper(e); });
        if (report.regime == Regime::Convergent) {
            try_add([&] { return robin_upper(e, opts.m, RobinVariant::PhiSigma); });
            try_add([&] { return robin_upper(e, opts.m, RobinVariant::RosserSchoenfeld); });
        }
    }

    if (!opts.ladder.empty()) {
        report.empirical = ladder_estimate(SumKind::Phi, e, opts.ladder, opts.sum);
        report.verdict = judge(report.bounds, *report.empirical);
    }
    return report;
}

nlohmann::ordered_json to_json(const BoundReport& report)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["u"] = report.exponents.u.to_string();
    j["v"] = report.exponents.v;
    j["regime"] = to_string(report.regime);
    ordered_json bounds = ordered_json::array();
    for (const auto& b : report.bounds) {
        ordered_json params = ordered_json::object();
        if (b.params.m) params["m"] = *b.params.m;
        if (b.params.eta) params["eta"] = *b.params.eta;
        if (b.params.variant) params["variant"] = *b.params.variant;
        if (b.params.applies_to) params["applies_to"] = *b.params.applies_to;
        bounds.push_back({{"name", b.name},
                          {"side", to_string(b.side)},
                          {"value", b.value},
                          {"source", b.source},
                          {"params", params}});
    }
    j["bounds"] = bounds;
    if (report.empirical) {
        ordered_json ladder = ordered_json::array();
        for (const auto& p : report.empirical->ladder) {
            ladder.push_back({{"N", p.n}, {"raw_sum", p.raw}, {"normalized", p.normalized}});
        }
        j["empirical"] = {{"ladder", ladder},
                          {"limit", report.empirical->limit_estimate},
                          {"gauge", report.empirical->error_gauge}};
    } else {
        j["empirical"] = nullptr;
    }
    j["verdict"] = to_string(report.verdict);
    return j;
}

BoundReport report_from_json(const nlohmann::ordered_json& j)
{
    BoundReport r;
    r.exponents.u = Rational::parse(j.at("u").get<std::string>());
    r.exponents.v = j.at("v").get<int>();
    r.regime = regime_from_string(j.at("regime").get<std::string>());
    for (const auto& jb : j.at("bounds")) {
        BoundValue b;
        b.name = jb.at("name").get<std::string>();
        const auto side = jb.at("side").get<std::string>();
        b.side = side == "lower" ? BoundSide::Lower : side == "upper" ? BoundSide::Upper : BoundSide::Exact;
        b.value = jb.at("value").get<double>();
        b.source = jb.at("source").get<std::string>();
        const auto& p = jb.at("params");
        if (p.contains("m")) b.params.m = p["m"].get<std::uint64_t>();
        if (p.contains("eta")) b.params.eta = p["eta"].get<double>();
        if (p.contains("variant")) b.params.variant = p["variant"].get<std::string>();
        if (p.contains("applies_to")) b.params.applies_to = p["applies_to"].get<std::string>();
        r.bounds.push_back(std::move(b));
    }
    if (!j.at("empirical").is_null()) {
        ConvergenceEstimate est;
        est.regime = r.regime;
        for (const auto& p : j["empirical"].at("ladder")) {
            est.ladder.push_back({p.at("N").get<std::uint64_t>(), p.at("raw_sum").get<double>(),
                                  p.at("normalized").get<double>()});
        }
        est.limit_estimate = j["empirical"].at("limit").get<double>();
        est.error_gauge = j["empirical"].at("gauge").get<double>();
        r.empirical = std::move(est);
    }
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "sandwiched") r.verdict = Verdict::Sandwiched;
    else if (verdict == "lower-violated") r.verdict = Verdict::LowerViolated;
    else if (verdict == "upper-violated") r.verdict = Verdict::UpperViolated;
    else r.verdict = Verdict::Inconclusive;
    return r;
}

} // namespace sumtot
