// Analytic lower and upper bounds for the leading constants A(u,v), B(u,v) and
// C(u,v) of F[k^u phi^v, N], plus the report that checks an empirical ladder
// estimate against every applicable bound.

#pragma once

#include "sumtot/summatory.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sumtot {

enum class BoundSide { Lower, Upper, Exact };

std::string to_string(BoundSide s);

enum class RobinVariant { PhiSigma, RosserSchoenfeld };

std::string to_string(RobinVariant v);

struct BoundParams {
    std::optional<std::uint64_t> m;
    std::optional<Real> eta;
    std::optional<std::string> variant;
    // "jordan" when the value is the limit for sum k^u J_v rather than for the phi sum
    std::optional<std::string> applies_to;

    bool empty() const { return !m && !eta && !variant && !applies_to; }
};

struct BoundValue {
    std::string name;
    Real value = 0;
    BoundSide side = BoundSide::Upper;
    std::string source;
    BoundParams params;

    bool applies_to_phi() const { return !params.applies_to || *params.applies_to == "phi"; }
};

// Exact limit of the Jordan sum: 1/((u+v+1) zeta(v+1)), 1/zeta(v+1), zeta(-u-v)/zeta(-u).
// Needs v >= 1, and -u > 1 in the convergent regime.
BoundValue jordan_exact(const ExponentPair& e);

// Same value as jordan_exact, as a bound on the phi sum; side is Exact when v = 1.
BoundValue lemma1_upper(const ExponentPair& e);

// v <= -1: 1/(u+v+1), 1, zeta(-u-v).
BoundValue lemma2_lower(const ExponentPair& e);

// v <= -1: 2^(|v|/2) D_inf(v, 1) / (u+v+1), 2^(|v|/2) D_inf(v, 1),
// 2^(|v|/2) D_inf(v, -u-v) zeta(-u-v).
BoundValue lemma3_upper(const ExponentPair& e);

// Bound on D_N(-1, s) from splitting off k = 2 and k = 6:
// 2^-s (1 - 1/sqrt 2) + 6^-s (1/2 - 1/sqrt 6) + zeta(s + 1/2).
Real refined_d_bound(Real s);

// v = -1 only: refined_d_bound(1) / (u+v+1), refined_d_bound(1),
// refined_d_bound(-u-v) zeta(-u-v).
BoundValue refined_vminus1_upper(const ExponentPair& e);

// Closed-form part of the Robin-type bound:
// (scale e^gamma)^|v| sum_r (-1)^r C(|v|,r) eta^(|v|-r) zeta^(r)(-u-v).
Real robin_closed_form(const ExponentPair& e, Real eta, Real scale);

// E_m + robin_closed_form. PhiSigma uses eta and scale zeta(2); RosserSchoenfeld
// uses eta_rosser and scale 1. eta overrides the variant's default when given.
BoundValue robin_upper(const ExponentPair& e, std::uint64_t m, RobinVariant variant,
                       std::optional<Real> eta = std::nullopt);

inline constexpr std::uint64_t kMaxCrossoverM = 10'000;

// Smallest m >= 3 with robin_upper(e, m) / zeta(-u-v) < target, or nullopt if
// none up to m_max. E_m grows by one term per step.
std::optional<std::uint64_t> crossover_m(const ExponentPair& e, Real target, std::uint64_t m_max,
                                         std::optional<Real> eta = std::nullopt);

enum class Verdict { Sandwiched, LowerViolated, UpperViolated, Inconclusive };

std::string to_string(Verdict v);

// A bound counts as violated only when the estimate is past it by more than
// gauge + kViolationSlack. Exact values must agree within gauge + kExactAgreement.
inline constexpr Real kViolationSlack = 1e-6;
inline constexpr Real kExactAgreement = 1e-3;

struct BoundReport {
    ExponentPair exponents;
    Regime regime = Regime::Polynomial;
    std::vector<BoundValue> bounds;
    std::optional<ConvergenceEstimate> empirical;
    Verdict verdict = Verdict::Inconclusive;
};

Verdict judge(const std::vector<BoundValue>& bounds, const ConvergenceEstimate& empirical);

struct ReportOptions {
    std::vector<std::uint64_t> ladder; // empty: no empirical estimate
    std::uint64_t m = 3;
    SumOptions sum;
};

BoundReport full_report(const ExponentPair& e, const ReportOptions& opts);

nlohmann::ordered_json to_json(const BoundReport& report);
BoundReport report_from_json(const nlohmann::ordered_json& j);

} // namespace sumtot
