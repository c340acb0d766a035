#pragma once

// On-disk result cache: one JSON file per key, payload guarded by a checksum
// and the library version tag. A corrupted or stale entry reads as a miss and
// is recomputed, never trusted.

#include <filesystem>
#include <optional>
#include <string>

namespace freestar {

inline constexpr const char* kVersionTag = "0.1.0";

class ResultCache {
public:
    ResultCache() = default;  // disabled
    explicit ResultCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& payload) const;

    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

// FNV-1a, the checksum used by cache entries.
std::string fnv1a_hex(const std::string& data);

}  // namespace freestar
