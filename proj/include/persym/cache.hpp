#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "persym/rank_distribution.hpp"

namespace persym {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kCacheDirEnv = "PERSYM_CACHE_DIR";

/// {n, k, method, counts[], sample_meta?, tool_version}; counts are decimal strings.
nlohmann::ordered_json to_json(const RankDistribution& d);
RankDistribution distribution_from_json(const nlohmann::ordered_json& j);

/// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string checksum(const nlohmann::ordered_json& payload);

/// On-disk store of exhaustive results, one immutable file per (n, k, method, tool_version).
///
/// Each file carries a checksum over its payload; a mismatch, unparsable file
/// or a payload whose key fields disagree with its name raises CacheCorrupted.
class DistributionCache {
public:
    explicit DistributionCache(std::filesystem::path dir);

    /// Directory named by PERSYM_CACHE_DIR, if set and non-empty.
    static std::optional<std::filesystem::path> dir_from_env();

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path path_for(int n, int k, Method method) const;

    std::optional<RankDistribution> load(int n, int k, Method method = Method::Exact) const;
    /// Writes the entry unless it already exists. Returns true if a file was written.
    bool store(const RankDistribution& d) const;

private:
    std::filesystem::path dir_;
};

}  // namespace persym
