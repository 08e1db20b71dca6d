#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sturan/extremal.hpp"
#include "sturan/multipartite.hpp"
#include "sturan/spectral.hpp"
#include "sturan/theorems.hpp"

namespace sturan {

using Json = nlohmann::ordered_json;

/// Numbers up to 2^64 - 1 are emitted as JSON integers, larger ones as decimal strings.
Json count_to_json(Count value);
Json witness_to_json(const MultipartiteWitness& w);
Json spectral_to_json(const SpectralEstimate& mu);

/// JSONL record with the fixed fields id, subcommand, params{n,r,c}, mu, kr,
/// verdict, witness (when present) and notes, followed by the extra detail
/// fields.
Json report_to_json(const TheoremReport& report, const std::string& subcommand);

Json gap_to_json(const GapReport& report);

}  // namespace sturan
