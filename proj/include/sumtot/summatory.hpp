// Summatory functions F[k^u phi^v, N] and F[k^u J_v, N], their regime
// normalizations, convergence ladders, the nested sum D_N(v, s) and the
// finite correction E_m of the Robin-type bound.

#pragma once

#include "sumtot/rational.hpp"
#include "sumtot/special.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sumtot {

struct ExponentPair {
    Rational u;
    int v = 0;

    // u + v + 1, exactly.
    Rational growth() const { return u + Rational(v + 1); }
};

enum class Regime { Polynomial, Logarithmic, Convergent };

std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

Regime classify(const ExponentPair& e);

// Phi: sum k^u phi(k)^v for any integer v.
// Jordan: sum k^u J_v(k) with v >= 1 the Jordan order.
enum class SumKind { Phi, Jordan };

std::string to_string(SumKind k);

// Summation options. threads > 1 partitions [1, N] into contiguous ranges and
// reduces them in ascending order, so a fixed thread count gives identical bits.
struct SumOptions {
    unsigned threads = 1;
};

Real summatory(SumKind kind, const ExponentPair& e, std::uint64_t n, SumOptions opts = {});

// F(N) for each N of an ascending list, from one pass over [1, max N].
std::vector<Real> summatory_prefixes(SumKind kind, const ExponentPair& e, std::span<const std::uint64_t> ns,
                                     SumOptions opts = {});

// Divide by N^(u+v+1), by ln N, or by 1 according to the regime.
Real normalize(const ExponentPair& e, std::uint64_t n, Real raw);

Real normalized(SumKind kind, const ExponentPair& e, std::uint64_t n, SumOptions opts = {});

struct LadderPoint {
    std::uint64_t n;
    Real raw;
    Real normalized;
};

struct ConvergenceEstimate {
    std::vector<LadderPoint> ladder;
    Real limit_estimate = 0;
    Real error_gauge = 0;
    Regime regime = Regime::Polynomial;
    Real fit_intercept = 0; // Logarithmic regime only
};

// 1e4, 3e4, ..., 1e7
std::vector<std::uint64_t> default_ladder();
// 1e4, 3e4, ..., 1e6
std::vector<std::uint64_t> quick_ladder();

// Polynomial/Convergent: the last normalized value, gauged by the last step.
// Logarithmic: slope of a least-squares fit F = a ln N + b, gauged by the largest
// residual over ln(max N).
ConvergenceEstimate ladder_estimate(SumKind kind, const ExponentPair& e, std::span<const std::uint64_t> ns,
                                    SumOptions opts = {});

// "N,raw_sum,normalized,regime" followed by one row per ladder point.
std::string ladder_csv(const ConvergenceEstimate& est);

inline constexpr std::uint64_t kMaxMultipleSumN = 2000;

// D_N(v, s): nested sum over tuples (k_1..k_|v|) with k_1...k_j <= N and weight
// mu^2(P_j)/phi(P_j) * k_j^-s at level j, P_j = k_1...k_j. Needs 1 <= |v| <= 3.
Real dn_multiple_sum(int v, Real s, std::uint64_t n);

// The k-th summand of E_m: k^u phi(k)^v - scale^|v| e^(gamma|v|) (eta + ln k)^|v| / k^(-u-v).
// scale is zeta(2) for the phi-sigma route and 1 for the Rosser-Schoenfeld route.
Real e_m_term(const ExponentPair& e, std::uint64_t k, std::uint64_t phi_k, Real eta, Real scale);

// E_m(u, v, eta) = sum_{k=1}^{m-1} e_m_term(k). Needs v < 0, u + v < -1, m >= 3.
Real e_m(const ExponentPair& e, std::uint64_t m, Real eta);
Real e_m(const ExponentPair& e, std::uint64_t m, Real eta, Real scale);

// Throws PreconditionError unless v < 0 and u + v < -1.
void require_convergent_negative(const ExponentPair& e);

} // namespace sumtot
