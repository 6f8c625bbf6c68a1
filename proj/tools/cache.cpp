#include "cache.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "superjac/error.hpp"

namespace superjac::cli {

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ResultCache::hash(const std::string& key)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    require(EVP_Digest(key.data(), key.size(), md, &len, EVP_sha256(), nullptr) == 1, ErrorKind::Unsupported,
            "SHA-256 unavailable");
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

std::filesystem::path ResultCache::path_for(const std::string& key) const
{
    const std::string h = hash(key);
    return dir_ / h.substr(0, 2) / (h + ".json");
}

std::optional<CachedResult> ResultCache::load(const std::string& key) const
{
    std::ifstream in(path_for(key));
    if (!in)
        return std::nullopt;
    Json doc = Json::parse(in, nullptr, false);
    // A foreign or truncated document is treated as a miss.
    if (doc.is_discarded() || !doc.contains("key") || doc["key"] != key)
        return std::nullopt;
    return CachedResult{doc["value"], doc["exit_code"].get<int>()};
}

void ResultCache::store(const std::string& key, const CachedResult& result) const
{
    const auto path = path_for(key);
    std::filesystem::create_directories(path.parent_path());
    Json doc;
    doc["key"] = key;
    doc["exit_code"] = result.exit_code;
    doc["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
    doc["value"] = result.value;
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp);
        out << doc.dump(2) << '\n';
        require(static_cast<bool>(out), ErrorKind::Unsupported, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace superjac::cli
