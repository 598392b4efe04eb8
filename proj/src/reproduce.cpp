#include "sumtot/reproduce.hpp"

#include "sumtot/bounds.hpp"
#include "sumtot/summatory.hpp"

#include <cstdio>
#include <numbers>
#include <sstream>

namespace sumtot {

std::string to_string(Tolerance t)
{
    switch (t) {
    case Tolerance::Absolute: return "abs";
    case Tolerance::Relative: return "rel";
    case Tolerance::IntegerSlack: return "int";
    case Tolerance::Below: return "below";
    }
    return "?";
}

std::string to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

ClaimStatus evaluate(const ClaimCheck& c)
{
    if (!std::isfinite(c.computed)) return ClaimStatus::Inconclusive;
    const double diff = std::abs(c.computed - c.published_value);
    bool ok = false;
    switch (c.kind) {
    case Tolerance::Absolute:
    case Tolerance::IntegerSlack: ok = diff <= c.tolerance; break;
    case Tolerance::Relative: ok = diff <= c.tolerance * std::abs(c.published_value); break;
    case Tolerance::Below: ok = c.computed < c.published_value; break;
    }
    return ok ? ClaimStatus::Pass : ClaimStatus::Fail;
}

std::vector<ClaimCheck> reproduce(const ReproduceOptions& opts)
{
    const bool full = opts.level == ReproduceLevel::Full;
    const std::uint64_t n_max = full ? 10'000'000 : 1'000'000;
    const std::uint64_t prime_limit = n_max;
    const std::vector<std::uint64_t> ladder = full ? default_ladder() : quick_ladder();
    const SumOptions sum_opts{opts.threads};

    std::vector<ClaimCheck> out;
    auto add = [&](std::string id, std::string what, double published, double computed, double tol, Tolerance kind) {
        ClaimCheck c{std::move(id), std::move(what), published, computed, tol, kind, ClaimStatus::Inconclusive};
        c.status = evaluate(c);
        out.push_back(std::move(c));
    };

    const auto& k = constants();
    const double z2 = zeta(2.0);
    const double z3 = zeta(3.0);
    const double z6 = zeta(6.0);
    const double sqrt2 = std::numbers::sqrt2;

    add("zeta_2", "zeta(2) = pi^2/6", 1.644934, z2, 1e-6, Tolerance::Absolute);
    add("sqrt2_zeta_1.5", "sqrt2 zeta(3/2) = sqrt2 D_inf(-1,1)", 3.694, sqrt2 * zeta(1.5), 1e-3, Tolerance::Absolute);
    add("sqrt2_zeta_2.5", "sqrt2 zeta(5/2) = sqrt2 D_inf(-1,2)", 1.897, sqrt2 * zeta(2.5), 1e-3, Tolerance::Absolute);
    add("refined_2.774", "refined D-bound at s = 1", 2.774, refined_d_bound(1.0), 1e-3, Tolerance::Absolute);
    add("refined_1.417", "refined D-bound at s = 2", 1.417, refined_d_bound(2.0), 1e-3, Tolerance::Absolute);

    const double zp_series = zeta_deriv(1, 2.0);
    const double zp_glaisher = zeta_prime2_glaisher();
    add("zeta_prime_2_series", "zeta'(2) from the log-weighted series", -0.937548, zp_series, 1e-6,
        Tolerance::Absolute);
    add("zeta_prime_2_glaisher", "zeta'(2) from the Glaisher-Kinkelin formula", -0.937548, zp_glaisher, 1e-6,
        Tolerance::Absolute);
    add("zeta_prime_2_routes", "|series - Glaisher| for zeta'(2)", 0.0, zp_series - zp_glaisher, 1e-5,
        Tolerance::Absolute);
    add("glaisher", "Glaisher-Kinkelin constant prefix", 1.282427, k.glaisher, 5e-7, Tolerance::Absolute);
    add("beta", "ln 3 - ln ln 3", 1.00456, k.beta, 1e-5, Tolerance::Absolute);
    add("eta", "D e^-gamma / ln ln 3 - beta", 2.8651, k.eta, 5e-4, Tolerance::Absolute);
    add("robin_closed_10.064", "e^gamma (eta zeta(2) - zeta'(2))", 10.064,
        robin_closed_form({Rational(-1), -1}, k.eta, z2) / z2, 1e-3, Tolerance::Absolute);

    const EulerProductValue g = euler_product(named_product("g"), prime_limit);
    add("g", "prod_p (1 + 1/(p^2 (p-1)))", 1.3398, g.value, 1e-4, Tolerance::Absolute);
    const double a1 = z2 * z3 / z6;
    add("zeta2_zeta3_over_zeta6", "zeta(2) zeta(3) / zeta(6)", 1.9436, a1, 1e-4, Tolerance::Absolute);

    const ExponentPair a_pair{Rational(1), -1};
    const ExponentPair b_pair{Rational(0), -1};
    const ExponentPair c_pair{Rational(-1), -1};
    add("A(1,-1)", "ladder limit of F[k/phi]/N", 1.9436, ladder_estimate(SumKind::Phi, a_pair, ladder, sum_opts).limit_estimate,
        1e-3, Tolerance::Relative);
    add("B(0,-1)", "affine-fit slope of F[1/phi] against ln N", 1.9436,
        ladder_estimate(SumKind::Phi, b_pair, ladder, sum_opts).limit_estimate, 5e-3, Tolerance::Absolute);
    add("C(-1,-1)", "F[1/(k phi)] at N_max against g zeta(2)", g.value * z2, summatory(SumKind::Phi, c_pair, n_max, sum_opts),
        1e-4, Tolerance::Absolute);

    add("A(0,2)_below", "A(0,2) product < 1/(3 zeta(3))", 1.0 / (3.0 * z3),
        euler_product(named_product("A(0,2)"), prime_limit).value, 0.0, Tolerance::Below);
    add("A(-1,1)", "A(-v,v) at v = 1 equals 1/zeta(2)", 1.0 / z2,
        euler_product(named_product("A(-v,v)", 1), prime_limit).value, 1e-6, Tolerance::Absolute);
    add("A(-2,2)_below", "A(-v,v) at v = 2 < 1/zeta(3)", 1.0 / z3,
        euler_product(named_product("A(-v,v)", 2), prime_limit).value, 0.0, Tolerance::Below);

    add("E_3(-1,-1)", "E_3(-1,-1,eta)", -9.50, e_m(c_pair, 3, k.eta), 5e-3, Tolerance::Absolute);

    const double target_l40 = sqrt2 * zeta(2.5);
    auto crossover = [&](double target, double eta) {
        const auto m = crossover_m(c_pair, target, kMaxCrossoverM, eta);
        return m ? static_cast<double>(*m) : std::numeric_limits<double>::quiet_NaN();
    };
    add("crossover_1.897", "smallest m with Robin g-bound < sqrt2 zeta(5/2)", 20, crossover(target_l40, k.eta), 2,
        Tolerance::IntegerSlack);
    add("crossover_1.417", "smallest m with Robin g-bound < 1.417", 195, crossover(1.417, k.eta), 3,
        Tolerance::IntegerSlack);
    add("crossover_1.897_rounded_eta", "as crossover_1.897 with eta = 2.8651", 20, crossover(target_l40, kRoundedEta), 2,
        Tolerance::IntegerSlack);
    add("crossover_1.417_rounded_eta", "as crossover_1.417 with eta = 2.8651", 195, crossover(1.417, kRoundedEta), 3,
        Tolerance::IntegerSlack);
    add("robin_g_bound_m200", "Robin g-bound at m = 200 below 1.417", 1.417,
        robin_upper(c_pair, 200, RobinVariant::PhiSigma).value / z2, 0.0, Tolerance::Below);

    return out;
}

nlohmann::ordered_json to_json(const std::vector<ClaimCheck>& claims)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
        arr.push_back(nlohmann::ordered_json{{"claim_id", c.claim_id},
                       {"description", c.description},
                       {"published_value", c.published_value},
                       {"computed", std::isfinite(c.computed) ? nlohmann::ordered_json(c.computed) : nlohmann::ordered_json(nullptr)},
                       {"tolerance", c.tolerance},
                       {"tolerance_kind", to_string(c.kind)},
                       {"status", to_string(c.status)}});
    }
    return arr;
}

std::string format_table(const std::vector<ClaimCheck>& claims)
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-30s %18s %18s %10s %-6s %s\n", "claim", "published", "computed", "tol", "kind",
                  "status");
    out << line;
    for (const auto& c : claims) {
        std::snprintf(line, sizeof line, "%-30s %18.10g %18.10g %10.3g %-6s %s\n", c.claim_id.c_str(), c.published_value,
                      c.computed, c.tolerance, to_string(c.kind).c_str(), to_string(c.status).c_str());
        out << line;
    }
    return out.str();
}

} // namespace sumtot
