// sumtot: command-line front end for the summatory-totient library.
//
// Exit codes: 0 success / all claims pass, 1 a reproduced claim failed,
// 2 usage or domain error, 3 capacity or overflow error.

#include "sumtot/bounds.hpp"
#include "sumtot/errors.hpp"
#include "sumtot/reproduce.hpp"
#include "sumtot/sieve.hpp"
#include "sumtot/special.hpp"
#include "sumtot/summatory.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace sumtot;
using nlohmann::ordered_json;

constexpr int kExitReproduceFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

double round10(double x)
{
    if (!std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt10(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void round_floats(ordered_json& j)
{
    if (j.is_number_float()) {
        j = round10(j.get<double>());
    } else if (j.is_structured()) {
        for (auto& child : j) round_floats(child);
    }
}

void print_json(ordered_json j)
{
    round_floats(j);
    std::cout << j.dump(2) << '\n';
}

// Accepts plain integers and scientific notation such as "1e7" or "2.5e3".
std::uint64_t parse_count(const std::string& text)
{
    const auto e = text.find_first_of("eE");
    Rational value = Rational::parse(text.substr(0, e));
    if (e != std::string::npos) {
        const int exp10 = std::stoi(text.substr(e + 1));
        if (exp10 < 0 || exp10 > 18) throw PreconditionError("exponent out of range in '" + text + "'");
        for (int i = 0; i < exp10; ++i) value = value * Rational(10);
    }
    if (!value.is_integer() || value.num() < 1) throw PreconditionError("'" + text + "' is not a positive integer");
    return static_cast<std::uint64_t>(value.num());
}

std::vector<std::uint64_t> parse_ladder(const std::string& text)
{
    if (text.empty() || text == "default") return default_ladder();
    if (text == "quick") return quick_ladder();
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_count(item));
    return out;
}

struct Globals {
    bool json = false;
    unsigned threads = 1;
    std::string prime_limit = "1e6";
    std::string ladder;
    CLI::Option* ladder_opt = nullptr;

    bool ladder_given() const { return ladder_opt && ladder_opt->count() > 0; }
};

ExponentPair pair_from(const std::string& u, int v)
{
    return {Rational::parse(u), v};
}

int cmd_sum(const Globals& g, const std::string& u_text, int v, const std::string& n_text, const std::string& kind_text)
{
    const SumKind kind = kind_text == "jordan" ? SumKind::Jordan : SumKind::Phi;
    if (kind_text != "phi" && kind_text != "jordan") throw PreconditionError("--kind must be phi or jordan");
    const ExponentPair e = pair_from(u_text, v);
    const SumOptions opts{g.threads};

    if (g.ladder_given()) {
        const auto est = ladder_estimate(kind, e, parse_ladder(g.ladder), opts);
        if (g.json) {
            ordered_json ladder = ordered_json::array();
            for (const auto& p : est.ladder) ladder.push_back({{"N", p.n}, {"raw_sum", p.raw}, {"normalized", p.normalized}});
            print_json({{"kind", to_string(kind)},
                        {"u", e.u.to_string()},
                        {"v", e.v},
                        {"regime", to_string(est.regime)},
                        {"ladder", ladder},
                        {"limit", est.limit_estimate},
                        {"gauge", est.error_gauge}});
        } else {
            std::cout << ladder_csv(est) << "# limit," << fmt10(est.limit_estimate) << "\n# gauge,"
                      << fmt10(est.error_gauge) << '\n';
        }
        return 0;
    }

    const std::uint64_t n = parse_count(n_text);
    const double raw = summatory(kind, e, n, opts);
    const Regime regime = classify(e);
    std::optional<double> norm;
    if (n >= 2) norm = normalize(e, n, raw);
    if (g.json) {
        print_json({{"kind", to_string(kind)},
                    {"u", e.u.to_string()},
                    {"v", e.v},
                    {"N", n},
                    {"raw_sum", raw},
                    {"normalized", norm ? ordered_json(*norm) : ordered_json(nullptr)},
                    {"regime", to_string(regime)}});
    } else {
        std::cout << "N,raw_sum,normalized,regime\n"
                  << n << ',' << fmt10(raw) << ',' << (norm ? fmt10(*norm) : "") << ',' << to_string(regime) << '\n';
    }
    return 0;
}

int cmd_bounds(const Globals& g, const std::string& u_text, int v, std::uint64_t m)
{
    ReportOptions opts;
    opts.m = m;
    opts.sum.threads = g.threads;
    opts.ladder = g.ladder_given() ? parse_ladder(g.ladder) : default_ladder();
    print_json(to_json(full_report(pair_from(u_text, v), opts)));
    return 0;
}

int cmd_zeta(const Globals& g, double s, unsigned r)
{
    const double value = r == 0 ? zeta(s) : zeta_deriv(r, s);
    if (g.json) {
        print_json({{"s", s}, {"deriv", r}, {"value", value}});
    } else {
        std::cout << fmt10(value) << '\n';
    }
    return 0;
}

int cmd_product(const Globals& g, const std::string& name, int v, double s)
{
    const auto spec = named_product(name, v, s);
    const auto result = euler_product(spec, parse_count(g.prime_limit));
    print_json({{"name", spec.name},
                {"prime_limit", parse_count(g.prime_limit)},
                {"value", result.value},
                {"tail_bound", result.tail_bound},
                {"lower", result.lower()},
                {"upper", result.upper()}});
    return 0;
}

int cmd_dn(const Globals& g, int v, double s, const std::string& n_text)
{
    const std::uint64_t n = parse_count(n_text);
    const double value = dn_multiple_sum(v, s, n);
    if (g.json) {
        print_json({{"v", v}, {"s", s}, {"N", n}, {"value", value}});
    } else {
        std::cout << fmt10(value) << '\n';
    }
    return 0;
}

int cmd_em(const Globals& g, const std::string& u_text, int v, std::uint64_t m, std::optional<double> eta)
{
    const ExponentPair e = pair_from(u_text, v);
    const double used_eta = eta.value_or(constants().eta);
    const double value = e_m(e, m, used_eta);
    if (g.json) {
        print_json({{"u", e.u.to_string()}, {"v", v}, {"m", m}, {"eta", used_eta}, {"value", value}});
    } else {
        std::cout << fmt10(value) << '\n';
    }
    return 0;
}

int cmd_crossover(const Globals& g, const std::string& u_text, int v, double target, std::uint64_t m_max,
                  std::optional<double> eta)
{
    const ExponentPair e = pair_from(u_text, v);
    const auto exact = crossover_m(e, target, m_max, eta);
    const auto rounded = crossover_m(e, target, m_max, kRoundedEta);
    auto as_json = [](const std::optional<std::uint64_t>& m) { return m ? ordered_json(*m) : ordered_json("not_found"); };
    if (g.json) {
        print_json({{"u", e.u.to_string()},
                    {"v", v},
                    {"target", target},
                    {"m", as_json(exact)},
                    {"eta", eta.value_or(constants().eta)},
                    {"m_rounded_eta", as_json(rounded)},
                    {"rounded_eta", kRoundedEta}});
    } else {
        std::cout << (exact ? std::to_string(*exact) : "not_found") << '\n';
    }
    return 0;
}

int cmd_reproduce(const Globals& g, const std::string& level)
{
    if (level != "quick" && level != "full") throw PreconditionError("--level must be quick or full");
    ReproduceOptions opts;
    opts.level = level == "full" ? ReproduceLevel::Full : ReproduceLevel::Quick;
    opts.threads = g.threads;
    const auto claims = reproduce(opts);
    if (g.json) {
        print_json(to_json(claims));
    } else {
        std::cout << format_table(claims);
    }
    for (const auto& c : claims) {
        if (c.status != ClaimStatus::Pass) return kExitReproduceFail;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Summatory totient functions, their limits and bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--threads", g.threads, "Worker threads for bulk summation")->check(CLI::Range(1u, 256u));
    app.add_option("--prime-limit", g.prime_limit, "Largest prime in Euler products");
    g.ladder_opt = app.add_option("--ladder", g.ladder, "Comma-separated N ladder, 'quick', or empty for the default")
                       ->expected(0, 1);

    std::string u = "0";
    int v = 0;
    std::string n = "1000";
    std::string kind = "phi";
    auto* sum = app.add_subcommand("sum", "F[k^u f^v, N] and its normalization");
    sum->add_option("--u", u, "Exponent u (exact decimal or p/q)")->required();
    sum->add_option("--v", v, "Integer exponent v (Jordan order for --kind jordan)")->required();
    sum->add_option("--n", n, "Upper limit N")->required();
    sum->add_option("--kind", kind, "phi or jordan");

    std::uint64_t m = 3;
    auto* bounds = app.add_subcommand("bounds", "All applicable bounds with a ladder verdict (JSON)");
    bounds->add_option("--u", u)->required();
    bounds->add_option("--v", v)->required();
    bounds->add_option("--m", m, "Number of exact terms in the Robin-type bound (m >= 3)");

    double s = 2.0;
    unsigned deriv = 0;
    auto* zeta_cmd = app.add_subcommand("zeta", "zeta(s) or its r-th derivative");
    zeta_cmd->add_option("--s", s)->required();
    zeta_cmd->add_option("--deriv", deriv, "Derivative order 0..8");

    std::string name;
    auto* product = app.add_subcommand("product", "Named Euler product with tail bound (JSON)");
    product->add_option("--name", name, "g, A(0,2), A(-v,v) or C(-v-s,v)")->required();
    product->add_option("--v", v);
    product->add_option("--s", s);

    auto* dn = app.add_subcommand("dn", "Nested multiple sum D_N(v, s)");
    dn->add_option("--v", v)->required();
    dn->add_option("--s", s)->required();
    dn->add_option("--n", n)->required();

    std::optional<double> eta;
    auto* em = app.add_subcommand("em", "Finite correction E_m(u, v, eta)");
    em->add_option("--u", u)->required();
    em->add_option("--v", v)->required();
    em->add_option("--m", m)->required();
    em->add_option("--eta", eta);

    double target = 0;
    std::uint64_t m_max = kMaxCrossoverM;
    auto* crossover = app.add_subcommand("crossover", "Smallest m whose Robin-type bound beats a target");
    crossover->add_option("--u", u)->required();
    crossover->add_option("--v", v)->required();
    crossover->add_option("--target", target)->required();
    crossover->add_option("--m-max", m_max);
    crossover->add_option("--eta", eta);

    std::string level = "quick";
    auto* repro = app.add_subcommand("reproduce", "Recompute every published constant and threshold");
    repro->add_option("--level", level, "quick or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*sum) return cmd_sum(g, u, v, n, kind);
        if (*bounds) return cmd_bounds(g, u, v, m);
        if (*zeta_cmd) return cmd_zeta(g, s, deriv);
        if (*product) return cmd_product(g, name, v, s);
        if (*dn) return cmd_dn(g, v, s, n);
        if (*em) return cmd_em(g, u, v, m, eta);
        if (*crossover) return cmd_crossover(g, u, v, target, m_max, eta);
        if (*repro) return cmd_reproduce(g, level);
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
