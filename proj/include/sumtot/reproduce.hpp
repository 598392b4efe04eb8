// Re-derives the published numeric constants and thresholds and compares each
// against its printed figure.

#pragma once

#include "sumtot/special.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace sumtot {

enum class Tolerance { Absolute, Relative, IntegerSlack, Below };

enum class ClaimStatus { Pass, Fail, Inconclusive };

std::string to_string(Tolerance t);
std::string to_string(ClaimStatus s);

struct ClaimCheck {
    std::string claim_id;
    std::string description;
    Real published_value = 0;
    Real computed = 0;
    Real tolerance = 0;
    Tolerance kind = Tolerance::Absolute;
    ClaimStatus status = ClaimStatus::Inconclusive;
};

// Pass iff |computed - published| within tolerance (relative: scaled by |published|),
// or computed < published for Below.
ClaimStatus evaluate(const ClaimCheck& c);

enum class ReproduceLevel { Quick, Full };

struct ReproduceOptions {
    ReproduceLevel level = ReproduceLevel::Quick;
    unsigned threads = 1;
};

std::vector<ClaimCheck> reproduce(const ReproduceOptions& opts);

nlohmann::ordered_json to_json(const std::vector<ClaimCheck>& claims);
std::string format_table(const std::vector<ClaimCheck>& claims);

} // namespace sumtot
