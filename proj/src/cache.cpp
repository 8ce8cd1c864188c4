#include "aperylab/cache.hpp"

#include <fstream>
#include <random>

#include "aperylab/errors.hpp"

namespace aperylab {

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string CacheKey::filename() const {
    std::string lab = label;
    for (char& c : lab)
        if (c == '(' || c == ')' || c == ',' || c == '/') c = '_';
    return kind + "_" + lab + "_" + std::to_string(n_max) + ".json";
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw input_error("Cache: cannot create directory " + dir_.string());
}

std::optional<nlohmann::json> Cache::load(const CacheKey& key) const {
    std::filesystem::path p = dir_ / key.filename();
    std::ifstream in(p);
    if (!in) return std::nullopt;
    nlohmann::json entry;
    try {
        in >> entry;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
    if (!entry.contains("payload") || !entry.contains("checksum")) return std::nullopt;
    std::string dump = entry["payload"].dump();
    if (entry["checksum"].get<std::string>() != std::to_string(fnv1a64(dump)))
        return std::nullopt;  // corrupt entry: ignore, caller recomputes
    return entry["payload"];
}

void Cache::store(const CacheKey& key, const nlohmann::json& payload) const {
    nlohmann::json entry{{"key", {{"kind", key.kind}, {"label", key.label}, {"n_max", key.n_max}}},
                         {"checksum", std::to_string(fnv1a64(payload.dump()))},
                         {"payload", payload}};
    std::random_device rd;
    std::filesystem::path tmp =
        dir_ / (key.filename() + ".tmp" + std::to_string(rd()) );
    {
        std::ofstream out(tmp);
        if (!out) throw input_error("Cache: cannot write " + tmp.string());
        out << entry.dump(1);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, dir_ / key.filename(), ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw input_error("Cache: rename failed for " + key.filename());
    }
}

} // namespace aperylab
