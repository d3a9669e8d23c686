#include "smoothwords/cache.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

extern "C" {
#include <unistd.h>
}

namespace smoothwords {

using json = nlohmann::json;

std::string to_string(CacheKind kind) {
    switch (kind) {
        case CacheKind::stats: return "stats";
        case CacheKind::height_class: return "height_class";
        case CacheKind::chain_family: return "chain_family";
    }
    return "unknown";
}

namespace {

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::optional<CacheKind> kind_from_string(std::string_view s) {
    for (CacheKind k : {CacheKind::stats, CacheKind::height_class, CacheKind::chain_family}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

}  // namespace

std::string content_checksum(std::string_view payload) { return hex(fnv1a(payload)); }

Cache::Cache(std::filesystem::path dir, std::ostream* warnings, int schema_version)
    : dir_(std::move(dir)), warnings_(warnings), schema_version_(schema_version) {}

void Cache::warn(const std::string& message) const {
    if (warnings_) *warnings_ << "warning: cache: " << message << '\n';
}

std::filesystem::path Cache::path_for(CacheKind kind, std::string_view key) const {
    std::string id = to_string(kind);
    id.push_back('\0');
    id.append(key);
    return dir_ / (to_string(kind) + "-" + hex(fnv1a(id)) + ".jsonl");
}

std::optional<CacheRecord> Cache::read(CacheKind kind, std::string_view key) const {
    const auto path = path_for(kind, key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    std::ifstream in(path);
    std::string line;
    if (!in || !std::getline(in, line)) {
        warn("cannot read " + path.string());
        return std::nullopt;
    }
    try {
        const json j = json::parse(line);
        CacheRecord rec;
        rec.schema_version = j.at("schema_version").get<int>();
        if (rec.schema_version != schema_version_) {
            warn(path.string() + " has schema version " + std::to_string(rec.schema_version) + ", expected " +
                 std::to_string(schema_version_) + "; ignoring");
            return std::nullopt;
        }
        const auto parsed_kind = kind_from_string(j.at("kind").get<std::string>());
        rec.key = j.at("key").get<std::string>();
        if (!parsed_kind || *parsed_kind != kind || rec.key != key) {
            warn(path.string() + " holds a different entry; ignoring");
            return std::nullopt;
        }
        rec.kind = *parsed_kind;
        rec.payload = j.at("payload").get<std::string>();
        rec.checksum = j.at("checksum").get<std::string>();
        if (content_checksum(rec.payload) != rec.checksum) {
            warn(path.string() + " fails its checksum; recomputing");
            return std::nullopt;
        }
        return rec;
    } catch (const json::exception& e) {
        warn(path.string() + " is malformed (" + e.what() + "); recomputing");
        return std::nullopt;
    }
}

bool Cache::write(CacheKind kind, std::string_view key, std::string_view payload) const {
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        warn("cannot create " + dir_.string() + ": " + ec.message());
        return false;
    }
    const json j{{"schema_version", schema_version_},
                 {"kind", to_string(kind)},
                 {"key", std::string(key)},
                 {"payload", std::string(payload)},
                 {"checksum", content_checksum(payload)}};
    const auto target = path_for(kind, key);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump() << '\n';
        if (!out.flush()) {
            warn("cannot write " + tmp.string());
            std::filesystem::remove(tmp, ec);
            return false;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        warn("cannot rename into " + target.string() + ": " + ec.message());
        std::filesystem::remove(tmp, ec);
        return false;
    }
    return true;
}

}  // namespace smoothwords
