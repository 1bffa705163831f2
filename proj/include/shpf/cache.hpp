#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <json.hpp>

namespace shpf {

// Bump whenever a cached payload's meaning or layout changes; stale files are
// simply never looked up again because the version is part of the file name.
inline constexpr int kCacheVersion = 1;

inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("SHPF_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "shpf";
    return std::filesystem::temp_directory_path() / "shpf-cache";
}

inline std::string cache_key(const std::string& op, int n) {
    return op + "-" + std::to_string(n) + "-v" + std::to_string(kCacheVersion);
}

// A missing entry and an unreadable entry look the same to the caller: both
// mean "recompute".  Corrupt files are removed so they are not re-parsed on
// every run.
inline std::optional<nlohmann::ordered_json> cache_load(const std::filesystem::path& dir,
                                                        const std::string& key) {
    const auto path = dir / (key + ".json");
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::ordered_json payload =
        nlohmann::ordered_json::parse(in, /*cb=*/nullptr, /*allow_exceptions=*/false);
    if (payload.is_discarded()) {
        std::cerr << "warning: discarding corrupt cache entry " << path.string() << "\n";
        std::filesystem::remove(path, ec);
        return std::nullopt;
    }
    return payload;
}

// Write-to-temp-then-rename keeps concurrent readers from ever seeing a
// partial file.  Failures only cost a recompute later, so they are warnings.
inline void cache_store(const std::filesystem::path& dir, const std::string& key,
                        const nlohmann::ordered_json& payload) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "warning: cannot create cache dir " << dir.string() << "\n";
        return;
    }
    std::random_device rd;
    const auto tmp = dir / (key + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp);
        if (!out) {
            std::cerr << "warning: cannot write cache entry " << tmp.string() << "\n";
            return;
        }
        out << payload.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, dir / (key + ".json"), ec);
    if (ec) {
        std::cerr << "warning: cannot finalize cache entry " << key << "\n";
        std::filesystem::remove(tmp, ec);
    }
}

} // namespace shpf
