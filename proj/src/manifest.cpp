#include "een/manifest.hpp"

#include <cstdio>

namespace een {

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    j["version"] = version;
    j["outputs"] = outputs;
    return j;
}

std::string RunManifest::comment() const {
    return "manifest " + to_json().dump();
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace een
