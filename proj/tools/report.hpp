#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "grpkit/constructions.hpp"
#include "grpkit/limits.hpp"
#include "grpkit/structure.hpp"
#include "grpkit/verify.hpp"

namespace grpkit::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "1.0.0";

// {artifact_version, command, seed, caps, results, timestamp}
Json envelope(const std::string& command, std::uint64_t seed, const Limits& caps, Json results);

// Booleans that were not computed serialize as "skipped".
Json tri(const std::optional<bool>& b);

Json to_json(const PrimeSet& s);
Json to_json(const SubgroupHandle& h);
Json to_json(const SeriesReport& s);
Json to_json(const PLengthResult& r);
Json to_json(const MonakhovReport& r);
Json to_json(const NormalizerQuotientResult& r);
Json to_json(const SylowNormalizerResult& r);
Json to_json(const TowerReport& r);
Json to_json(const TheoremACertificate& c);
Json to_json(const PLengthEntry& e);
Json to_json(const PLengthSweepReport& r);
Json to_json(const Fingerprint& f);

}  // namespace grpkit::report
