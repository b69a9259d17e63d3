#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace een {

inline constexpr std::string_view kVersion = "0.3.1";

/// Provenance record written as a leading comment line of every output.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string version{kVersion};
    std::vector<std::string> outputs;

    nlohmann::ordered_json to_json() const;
    /// Single comment line: `manifest {...}` (the writer adds the '#').
    std::string comment() const;
};

/// FNV-1a 64-bit hash, printed as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace een
