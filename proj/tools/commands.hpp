#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cache.hpp"
#include "superjac/numtheory.hpp"

namespace superjac::cli {

inline constexpr const char* kVersion = "superjac-1.0.0";

struct Args {
    std::map<std::string, std::string> values;
    u64 seed = 0;
    std::optional<u64> budget;

    bool has(const std::string& name) const { return values.count(name) != 0; }
    const std::string& str(const std::string& name) const;
    u64 u(const std::string& name) const;
    u64 u(const std::string& name, u64 fallback) const;
    std::vector<i64> list(const std::string& name) const;
    /// Canonical cache key material.
    std::string canonical(const std::string& op) const;
};

struct OptionSpec {
    OptionSpec(std::string n, bool req = true, std::string h = {})
        : name(std::move(n)), required(req), help(std::move(h))
    {
    }
    std::string name;
    bool required;
    std::string help;
};

struct Command {
    std::string name;
    std::string help;
    std::vector<OptionSpec> options;
    std::function<CachedResult(const Args&)> run;
};

const std::vector<Command>& commands();

} // namespace superjac::cli
