#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "invy/types.hpp"

namespace invy {

// Everything needed to reproduce one run.  `canonical` is the normalized
// scenario document: preset expanded, defaults filled in, keys sorted.  Its
// dump is what gets hashed and embedded in output headers, so re-ingesting an
// exported file reproduces the run bit for bit.
struct RunConfig {
    Scenario scenario;
    SpectrumGrid grid;
    Channel channel = Channel::S2;
    nlohmann::json canonical;

    std::string canonical_text() const { return canonical.dump(); }
    std::uint64_t hash() const;
};

// Complex entries are [magnitude, phase-in-degrees] pairs; the four cardinal
// phases map to exact axis values so real-valued scenarios round-trip
// bit-exactly.
cplx polar_value(double magnitude, double phase_deg);

// Parses a scenario document.  Accepts a JSON object (optionally naming a
// "preset" whose fields it overrides) or an exported spectrum file, whose
// "# scenario:" header line is re-ingested.  Unknown keys are rejected.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);
RunConfig preset_run_config(std::string_view name);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::uint64_t h);

}  // namespace invy
