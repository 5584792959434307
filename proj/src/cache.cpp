#include "persym/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "persym/errors.hpp"

namespace persym {

using nlohmann::ordered_json;

ordered_json to_json(const RankDistribution& d) {
    ordered_json j;
    j["n"] = d.n;
    j["k"] = d.k;
    j["method"] = std::string(to_string(d.method));
    ordered_json counts = ordered_json::array();
    for (const auto& c : d.counts) {
        counts.push_back(c.get_str());
    }
    j["counts"] = std::move(counts);
    if (d.sample_meta) {
        j["sample_meta"] = {{"samples", d.sample_meta->samples}, {"seed", d.sample_meta->seed}};
    }
    j["tool_version"] = kToolVersion;
    return j;
}

RankDistribution distribution_from_json(const ordered_json& j) {
    RankDistribution d;
    d.n = j.at("n").get<int>();
    d.k = j.at("k").get<int>();
    d.method = method_from_string(j.at("method").get<std::string>());
    for (const auto& c : j.at("counts")) {
        mpz_class v;
        if (v.set_str(c.get<std::string>(), 10) != 0 || v < 0) {
            throw std::invalid_argument("count '" + c.get<std::string>() +
                                        "' is not a non-negative decimal integer");
        }
        d.counts.push_back(v);
    }
    if (d.counts.size() != RankDistribution::length_for(d.n, d.k)) {
        throw std::invalid_argument("counts has " + std::to_string(d.counts.size()) +
                                    " entries, expected min(2n,k)+1");
    }
    if (j.contains("sample_meta")) {
        const auto& m = j.at("sample_meta");
        d.sample_meta = SampleMeta{m.at("samples").get<std::uint64_t>(),
                                   m.at("seed").get<std::uint64_t>()};
    }
    return d;
}

std::string checksum(const ordered_json& payload) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : payload.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

DistributionCache::DistributionCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> DistributionCache::dir_from_env() {
    const char* v = std::getenv(kCacheDirEnv);
    if (v == nullptr || *v == '\0') {
        return std::nullopt;
    }
    return std::filesystem::path(v);
}

std::filesystem::path DistributionCache::path_for(int n, int k, Method method) const {
    return dir_ / ("rankdist-n" + std::to_string(n) + "-k" + std::to_string(k) + "-" +
                   std::string(to_string(method)) + "-v" + kToolVersion + ".json");
}

std::optional<RankDistribution> DistributionCache::load(int n, int k, Method method) const {
    const auto path = path_for(n, k, method);
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    ordered_json file;
    try {
        file = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw CacheCorrupted("cache entry " + path.string() + " is not valid JSON: " + e.what());
    }
    if (!file.is_object() || !file.contains("payload") || !file.contains("checksum")) {
        throw CacheCorrupted("cache entry " + path.string() + " lacks payload/checksum");
    }
    const auto& payload = file.at("payload");
    if (checksum(payload) != file.at("checksum").get<std::string>()) {
        throw CacheCorrupted("checksum mismatch in cache entry " + path.string());
    }
    RankDistribution d;
    try {
        d = distribution_from_json(payload);
    } catch (const std::exception& e) {
        throw CacheCorrupted("cache entry " + path.string() + ": " + e.what());
    }
    if (d.n != n || d.k != k || d.method != method ||
        payload.at("tool_version").get<std::string>() != kToolVersion) {
        throw CacheCorrupted("cache entry " + path.string() + " does not match its key");
    }
    return d;
}

bool DistributionCache::store(const RankDistribution& d) const {
    const auto path = path_for(d.n, d.k, d.method);
    if (std::filesystem::exists(path)) {
        return false;
    }
    std::filesystem::create_directories(dir_);
    ordered_json file;
    file["payload"] = to_json(d);
    file["checksum"] = checksum(file["payload"]);

    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write cache entry " + tmp.string());
        }
        out << file.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
    return true;
}

}  // namespace persym
