#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace superjac::cli {

using Json = nlohmann::ordered_json;

struct CachedResult {
    Json value;
    int exit_code = 0;
};

/// Content-addressed store: one JSON document per key under dir/<h0h1>/<hash>.json.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    static std::string hash(const std::string& key);

    std::optional<CachedResult> load(const std::string& key) const;
    /// Written to a temporary file and renamed into place.
    void store(const std::string& key, const CachedResult& result) const;

private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
};

} // namespace superjac::cli
