#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mcx/reduction.hpp"
#include "mcx/tilings.hpp"

namespace mcx {

struct ChannelSelection {
    bool homology = true;
    bool engine = true;
    bool formula = true;
};

ChannelSelection channels_from_csv(const std::string& csv); // "homology,engine,formula"

/// Cross-checked verification run over one tiling spec. Channels that
/// cannot produce output (no closed form for the family, enumeration budget,
/// partial reduction) are reported as unavailable and excluded from the
/// agreement verdicts. Certainty labels: "certified-by-trace" for a
/// verified engine trace, "homology-consistent" for the oracle channel,
/// "formula" for closed forms.
struct RunReport {
    nlohmann::json body;
    bool all_agree = false;
};

RunReport run_verification(const tilings::TilingSpec& spec,
                           const ChannelSelection& channels,
                           std::size_t budget = kDefaultReduceBudget,
                           Strategy engine_strategy = Strategy::Auto,
                           std::optional<long long> seed = std::nullopt);

} // namespace mcx
