#include "freestar/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace freestar {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    return dir_ / (fnv1a_hex(key) + ".json");
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json entry = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
    if (entry.value("key", "") != key) return std::nullopt;
    if (entry.value("version", "") != kVersionTag) return std::nullopt;
    if (!entry.contains("payload") || !entry["payload"].is_string()) return std::nullopt;
    const std::string payload = entry["payload"].get<std::string>();
    if (entry.value("checksum", "") != fnv1a_hex(payload)) return std::nullopt;
    return payload;
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
    if (!enabled()) return;
    nlohmann::json entry{{"key", key},
                         {"version", kVersionTag},
                         {"checksum", fnv1a_hex(payload)},
                         {"payload", payload}};
    std::ofstream out(path_for(key));
    out << entry.dump(2) << '\n';
}

}  // namespace freestar
