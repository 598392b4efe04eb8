#include "sumtot/bounds.hpp"
#include "sumtot/errors.hpp"
#include "sumtot/sieve.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sumtot;

namespace {

ExponentPair pair(const char* u, int v)
{
    return {Rational::parse(u), v};
}

const BoundValue* find(const BoundReport& r, const std::string& name, const std::string& variant = "")
{
    for (const auto& b : r.bounds) {
        if (b.name != name) continue;
        if (!variant.empty() && b.params.variant != variant) continue;
        return &b;
    }
    return nullptr;
}

ConvergenceEstimate estimate(double limit, double gauge)
{
    ConvergenceEstimate est;
    est.limit_estimate = limit;
    est.error_gauge = gauge;
    return est;
}

// mpmath, 30 digits
constexpr double sqrt2_zeta_1_5 = 3.694456648;
constexpr double sqrt2_zeta_2_5 = 1.897149473;
constexpr double refined_1 = 2.774113910;
constexpr double refined_g = 1.417259221;
constexpr double robin_g_constant = 10.0639988;
constexpr double g_zeta2 = 2.2038565964378587;

} // namespace

TEST_CASE("jordan_exact examples")
{
    const double z2 = zeta(2.0);
    CHECK(std::abs(jordan_exact(pair("0", 1)).value - 3.0 / (std::numbers::pi * std::numbers::pi)) < 1e-12);
    CHECK(std::abs(jordan_exact(pair("-2", 1)).value - 1.0 / z2) < 1e-12);
    CHECK(std::abs(jordan_exact(pair("-3", 1)).value - z2 / zeta(3.0)) < 1e-12);
    CHECK(jordan_exact(pair("0", 1)).side == BoundSide::Exact);
    CHECK(jordan_exact(pair("0", 1)).params.applies_to == "jordan");
    CHECK_THROWS_AS(jordan_exact(pair("0", 0)), PreconditionError);
    CHECK_THROWS_AS(jordan_exact(pair("0", -1)), PreconditionError);
}

TEST_CASE("lemma1_upper examples")
{
    const auto b = lemma1_upper(pair("0", 2));
    CHECK(std::abs(b.value - 1.0 / (3.0 * zeta(3.0))) < 1e-12);
    CHECK(std::abs(b.value - 0.27735) < 1e-4);
    CHECK(b.side == BoundSide::Upper);
    CHECK(lemma1_upper(pair("0", 1)).side == BoundSide::Exact);
    CHECK(std::abs(lemma1_upper(pair("-4", 2)).value - zeta(2.0) / zeta(4.0)) < 1e-12);
    CHECK(std::abs(lemma1_upper(pair("-3", 2)).value - 1.0 / zeta(3.0)) < 1e-12);
    CHECK_THROWS_AS(lemma1_upper(pair("1", -1)), PreconditionError);
}

TEST_CASE("lemma1 and jordan_exact coincide at v = 1")
{
    for (const char* u : {"2", "0", "-1/2", "-2", "-5/2", "-3", "-4"}) {
        CHECK(lemma1_upper(pair(u, 1)).value == jordan_exact(pair(u, 1)).value);
    }
}

TEST_CASE("lemma2_lower examples")
{
    CHECK(lemma2_lower(pair("1", -1)).value == 1.0);
    CHECK(lemma2_lower(pair("0", -1)).value == 1.0);
    CHECK(std::abs(lemma2_lower(pair("-1", -1)).value - zeta(2.0)) < 1e-15);
    CHECK(std::abs(lemma2_lower(pair("2", -1)).value - 0.5) < 1e-15);
    CHECK(lemma2_lower(pair("1", -1)).side == BoundSide::Lower);
    CHECK_THROWS_AS(lemma2_lower(pair("0", 1)), PreconditionError);
}

TEST_CASE("lemma3_upper examples")
{
    CHECK(std::abs(lemma3_upper(pair("1", -1)).value - sqrt2_zeta_1_5) < 1e-8);
    CHECK(std::abs(lemma3_upper(pair("0", -1)).value - sqrt2_zeta_1_5) < 1e-8);
    CHECK(std::abs(lemma3_upper(pair("-1", -1)).value / zeta(2.0) - sqrt2_zeta_2_5) < 1e-8);
    CHECK(std::abs(lemma3_upper(pair("2", -2)).value - 2.0 * zeta(1.5) * zeta(2.0)) < 1e-12);
    CHECK_THROWS_AS(lemma3_upper(pair("0", 2)), PreconditionError);
}

TEST_CASE("refined bound examples")
{
    CHECK(std::abs(refined_d_bound(1.0) - refined_1) < 1e-8);
    CHECK(std::abs(refined_d_bound(2.0) - refined_g) < 1e-8);
    CHECK(std::abs(refined_vminus1_upper(pair("0", -1)).value - 2.774) < 5e-4);
    CHECK(std::abs(refined_vminus1_upper(pair("-1", -1)).value / zeta(2.0) - 1.417) < 5e-4);
    CHECK_THROWS_AS(refined_vminus1_upper(pair("0", -2)), PreconditionError);
}

TEST_CASE("refined bound is below lemma3 wherever both apply")
{
    for (const char* u : {"3", "1", "1/2", "0", "-1/2", "-1", "-2", "-7/2"}) {
        const auto e = pair(u, -1);
        CHECK(refined_vminus1_upper(e).value < lemma3_upper(e).value);
    }
}

TEST_CASE("refined D bound holds for the finite nested sum")
{
    for (double s : {1.0, 1.5, 2.0, 3.0}) CHECK(dn_multiple_sum(-1, s, kMaxMultipleSumN) < refined_d_bound(s));
}

TEST_CASE("Robin closed form")
{
    const auto e = pair("-1", -1);
    const double eta = constants().eta;
    const double z2 = zeta(2.0);
    const double closed = robin_closed_form(e, eta, z2);
    CHECK(std::abs(closed / z2 - robin_g_constant) < 1e-6);
    CHECK(std::abs(closed / z2 - 10.064) < 5e-4);
    // at |v| = 1 the binomial sum collapses to two terms
    const double two_terms = std::exp(constants().euler_gamma) * z2 * (eta * z2 - zeta_deriv(1, 2.0));
    CHECK(std::abs(closed - two_terms) < 1e-12 * closed);
    CHECK_THROWS_AS(robin_closed_form(pair("0", -1), eta, z2), PreconditionError);
}

TEST_CASE("robin_upper")
{
    const auto e = pair("-1", -1);
    const double z2 = zeta(2.0);
    const auto b3 = robin_upper(e, 3, RobinVariant::PhiSigma);
    CHECK(std::abs(b3.value - (e_m(e, 3, constants().eta) + robin_closed_form(e, constants().eta, z2))) < 1e-12);
    CHECK(std::abs(b3.value - (-9.50 + z2 * 10.064)) < 2e-2);
    CHECK(b3.params.m == 3u);
    CHECK(b3.params.variant == "phi-sigma");
    CHECK(*b3.params.eta == constants().eta);

    const auto rs = robin_upper(e, 3, RobinVariant::RosserSchoenfeld);
    CHECK(rs.params.variant == "rosser-schoenfeld");
    CHECK(std::abs(*rs.params.eta - constants().eta_rosser) < 1e-15);

    const auto overridden = robin_upper(e, 3, RobinVariant::PhiSigma, kRoundedEta);
    CHECK(*overridden.params.eta == kRoundedEta);

    CHECK_THROWS_AS(robin_upper(pair("0", -1), 10, RobinVariant::PhiSigma), PreconditionError);
    CHECK_THROWS_AS(robin_upper(e, 2, RobinVariant::PhiSigma), PreconditionError);
}

TEST_CASE("robin_upper is nonincreasing in m when the appended terms are negative")
{
    const auto e = pair("-1", -1);
    const double eta = constants().eta;
    const auto phi = phi_table(600);
    double previous = robin_upper(e, 3, RobinVariant::PhiSigma).value;
    for (std::uint64_t m = 4; m <= 600; ++m) {
        REQUIRE(e_m_term(e, m - 1, phi[m - 1], eta, zeta(2.0)) < 0.0);
        const double current = robin_upper(e, m, RobinVariant::PhiSigma).value;
        CHECK(current <= previous);
        previous = current;
    }
}

TEST_CASE("robin_upper for large m is a valid bound below the refined one")
{
    const auto e = pair("-1", -1);
    const double z2 = zeta(2.0);
    const double big = robin_upper(e, 5000, RobinVariant::PhiSigma).value;
    CHECK(big / z2 < 1.417);
    CHECK(big > g_zeta2);
    CHECK(robin_upper(e, 5000, RobinVariant::RosserSchoenfeld).value > g_zeta2);
}

TEST_CASE("crossover_m")
{
    const auto e = pair("-1", -1);
    const auto m1 = crossover_m(e, std::numbers::sqrt2 * zeta(2.5), kMaxCrossoverM);
    REQUIRE(m1);
    CHECK(*m1 >= 18);
    CHECK(*m1 <= 22);
    const auto m2 = crossover_m(e, 1.417, kMaxCrossoverM);
    REQUIRE(m2);
    CHECK(*m2 >= 192);
    CHECK(*m2 <= 198);
    CHECK(crossover_m(e, 1e6, 100) == 3u);
    CHECK_FALSE(crossover_m(e, 1.0, 100));

    // the rounded eta stays inside the same windows
    const auto r1 = crossover_m(e, std::numbers::sqrt2 * zeta(2.5), kMaxCrossoverM, kRoundedEta);
    const auto r2 = crossover_m(e, 1.417, kMaxCrossoverM, kRoundedEta);
    REQUIRE(r1);
    REQUIRE(r2);
    CHECK(std::abs(static_cast<long>(*r1) - 20) <= 2);
    CHECK(std::abs(static_cast<long>(*r2) - 195) <= 3);

    CHECK_THROWS_AS(crossover_m(e, 0.0, 100), PreconditionError);
    CHECK_THROWS_AS(crossover_m(e, 1.5, kMaxCrossoverM + 1), PreconditionError);
    CHECK_THROWS_AS(crossover_m(pair("1", -1), 1.5, 100), PreconditionError);
}

TEST_CASE("crossover_m agrees with a direct scan of robin_upper")
{
    const auto e = pair("-1", -1);
    const double z2 = zeta(2.0);
    const double target = std::numbers::sqrt2 * zeta(2.5);
    std::uint64_t scanned = 0;
    for (std::uint64_t m = 3; m <= 100; ++m) {
        if (robin_upper(e, m, RobinVariant::PhiSigma).value / z2 < target) {
            scanned = m;
            break;
        }
    }
    CHECK(crossover_m(e, target, 100) == scanned);
}

TEST_CASE("judge")
{
    const std::vector<BoundValue> bounds = {
        {"lo", 1.0, BoundSide::Lower, "", {}},
        {"hi", 3.0, BoundSide::Upper, "", {}},
    };
    CHECK(judge(bounds, estimate(2.0, 0.01)) == Verdict::Sandwiched);
    CHECK(judge(bounds, estimate(3.5, 0.01)) == Verdict::UpperViolated);
    CHECK(judge(bounds, estimate(0.5, 0.01)) == Verdict::LowerViolated);
    // within gauge of a bound: neither violated nor clearly inside
    CHECK(judge(bounds, estimate(3.005, 0.01)) == Verdict::Inconclusive);
    CHECK(judge(bounds, estimate(2.995, 0.01)) == Verdict::Inconclusive);
    CHECK(judge(bounds, estimate(3.0 + 5e-7, 0.0)) == Verdict::Inconclusive);

    const std::vector<BoundValue> exact = {{"eq", 2.0, BoundSide::Exact, "", {}}};
    CHECK(judge(exact, estimate(2.0005, 0.0)) == Verdict::Sandwiched);
    CHECK(judge(exact, estimate(2.01, 0.001)) == Verdict::UpperViolated);
    CHECK(judge(exact, estimate(1.99, 0.001)) == Verdict::LowerViolated);

    BoundValue jordan_only{"J", 0.0, BoundSide::Exact, "", {}};
    jordan_only.params.applies_to = "jordan";
    CHECK(judge({jordan_only}, estimate(5.0, 0.0)) == Verdict::Sandwiched);
}

TEST_CASE("full_report bound sets")
{
    const auto r1 = full_report(pair("1", -1), {});
    CHECK(r1.regime == Regime::Polynomial);
    CHECK(find(r1, "Lemma2-lower"));
    CHECK(find(r1, "Lemma3-upper"));
    CHECK(find(r1, "Refined-v=-1"));
    CHECK_FALSE(find(r1, "RobinTheorem"));
    CHECK_FALSE(r1.empirical);
    CHECK(r1.verdict == Verdict::Inconclusive);

    const auto r2 = full_report(pair("-1", -1), {.ladder = {}, .m = 200, .sum = {}});
    const auto* robin = find(r2, "RobinTheorem", "phi-sigma");
    REQUIRE(robin);
    CHECK(robin->value / zeta(2.0) < 1.417);
    CHECK(find(r2, "RobinTheorem", "rosser-schoenfeld"));

    const auto r3 = full_report(pair("0", 2), {});
    REQUIRE(find(r3, "Lemma1-upper"));
    CHECK(std::abs(find(r3, "Lemma1-upper")->value - 1.0 / (3.0 * zeta(3.0))) < 1e-12);
    CHECK(find(r3, "Jordan-exact"));

    const auto r4 = full_report(pair("0", 0), {});
    REQUIRE(r4.bounds.size() == 1);
    CHECK(r4.bounds.front().name == "PowerSum-exact");
    CHECK(r4.bounds.front().value == 1.0);

    // -u-v = 1.0000001 is outside the zeta domain used by the convergent bounds
    const auto r5 = full_report({Rational(-1, 10000000), -1}, {});
    CHECK(find(r5, "Lemma2-lower") == nullptr);
    CHECK(find(r5, "RobinTheorem") == nullptr);
}

TEST_CASE("full_report verdicts on the documented examples")
{
    const ReportOptions opts{.ladder = quick_ladder(), .m = 3, .sum = {}};

    const auto a = full_report(pair("1", -1), opts);
    REQUIRE(a.empirical);
    CHECK(std::abs(a.empirical->limit_estimate - 1.9436) < 1e-3);
    CHECK(a.verdict == Verdict::Sandwiched);

    const auto b = full_report(pair("0", 2), opts);
    REQUIRE(b.empirical);
    CHECK(std::abs(b.empirical->limit_estimate - 0.14274983689874235) < 1e-5);
    CHECK(b.verdict == Verdict::Sandwiched);

    const auto c = full_report(pair("0", 0), opts);
    CHECK(std::abs(c.empirical->limit_estimate - 1.0) < 1e-5);
    CHECK(c.verdict == Verdict::Sandwiched);

    const auto d = full_report(pair("0", 1), opts);
    CHECK(d.verdict == Verdict::Sandwiched);
}

TEST_CASE("report JSON round trip")
{
    const ReportOptions opts{.ladder = {1000, 3000, 10000, 30000}, .m = 25, .sum = {}};
    for (const auto& e : {pair("-1", -1), pair("0", 2), pair("0", 0), pair("1/2", -2)}) {
        const auto report = full_report(e, opts);
        const auto j = to_json(report);
        const auto back = to_json(report_from_json(j));
        CHECK(j.dump() == back.dump());
        CHECK(nlohmann::ordered_json::parse(j.dump()).dump() == j.dump());
    }
    const auto j = to_json(full_report(pair("-1", -1), {.ladder = {}, .m = 3, .sum = {}}));
    CHECK(j["empirical"].is_null());
    CHECK(j["u"] == "-1");
    CHECK(j["verdict"] == "inconclusive");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"u", "v", "regime", "bounds", "empirical", "verdict"});
}
