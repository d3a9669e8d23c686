#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace smoothwords {

enum class CacheKind { stats, height_class, chain_family };

std::string to_string(CacheKind kind);

inline constexpr int kCacheSchemaVersion = 1;

struct CacheRecord {
    int schema_version = kCacheSchemaVersion;
    CacheKind kind = CacheKind::stats;
    std::string key;      // canonical parameter string, e.g. "n_max=64"
    std::string payload;
    std::string checksum; // FNV-1a 64 of payload, 16 hex digits

    friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

/// FNV-1a 64-bit, lowercase hex.
std::string content_checksum(std::string_view payload);

/**
 * Directory of memoized results, one JSON record per file.
 *
 * File names are derived from (kind, key). Writes go to a temporary file that
 * is renamed into place, so readers never see a partial record. A record that
 * fails to parse, has a bad checksum, or carries another schema version is
 * reported on `warnings` and treated as a miss.
 */
class Cache {
public:
    explicit Cache(std::filesystem::path dir, std::ostream* warnings = nullptr,
                   int schema_version = kCacheSchemaVersion);

    std::optional<CacheRecord> read(CacheKind kind, std::string_view key) const;

    /// Returns false (after a warning) on IO failure.
    bool write(CacheKind kind, std::string_view key, std::string_view payload) const;

    std::filesystem::path path_for(CacheKind kind, std::string_view key) const;
    const std::filesystem::path& dir() const noexcept { return dir_; }

private:
    void warn(const std::string& message) const;

    std::filesystem::path dir_;
    std::ostream* warnings_;
    int schema_version_;
};

}  // namespace smoothwords
