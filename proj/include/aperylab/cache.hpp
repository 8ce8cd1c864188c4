#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace aperylab {

uint64_t fnv1a64(std::string_view data);

struct CacheKey {
    std::string kind;    // e.g. "seqpair"
    std::string label;   // variety or N
    long n_max = 0;

    std::string filename() const;
};

// Disk cache of serialized sequences. Entries are JSON files carrying their
// key and an FNV-1a checksum of the payload dump; writes go through a
// temporary file plus rename so parallel commands can share a directory.
class Cache {
  public:
    explicit Cache(std::filesystem::path dir);

    std::optional<nlohmann::json> load(const CacheKey& key) const;
    void store(const CacheKey& key, const nlohmann::json& payload) const;

    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
};

} // namespace aperylab
