#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cache.hpp"
#include "commands.hpp"
#include "superjac/error.hpp"

using namespace superjac;
using namespace superjac::cli;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BudgetExceeded:
        return kBudget;
    case ErrorKind::NotPrime:
    case ErrorKind::NotSeparable:
    case ErrorKind::BadCharacteristic:
    case ErrorKind::InvalidArgument:
    case ErrorKind::RequiresD1:
    case ErrorKind::CharacterUnavailable:
    case ErrorKind::ZeroShift:
    case ErrorKind::Unsupported:
    case ErrorKind::ContextMismatch:
        return kUsage;
    default:
        return kCheckFailed;
    }
}

void flatten(const Json& v, const std::string& prefix, std::ostream& out)
{
    const bool leaf_array =
        v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive() || x.is_array(); });
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (v.is_array() && !leaf_array) {
        for (std::size_t i = 0; i < v.size(); ++i)
            flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
}

void emit(const Json& v, bool json)
{
    if (json)
        std::cout << v.dump(2) << '\n';
    else
        flatten(v, "", std::cout);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Superelliptic Jacobian toolkit"};
    app.require_subcommand(1);
    bool json = false, verify = false;
    std::string cache_dir;
    u64 seed = 0;
    std::optional<u64> budget;
    app.add_flag("--json", json, "print JSON");
    app.add_option("--cache-dir", cache_dir, "result cache directory");
    app.add_option("--seed", seed, "seed for randomized steps")->capture_default_str();
    app.add_option("--budget", budget, "work budget (field elements, or classes for picard)");
    app.add_flag("--verify-cache", verify, "recompute on every cache hit and compare");

    std::map<std::string, std::string> raw;
    const Command* chosen = nullptr;
    for (const auto& cmd : commands()) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->fallthrough();
        for (const auto& opt : cmd.options) {
            auto* o = sub->add_option_function<std::string>(
                "--" + opt.name, [&raw, name = opt.name](const std::string& v) { raw[name] = v; }, opt.help);
            if (opt.required)
                o->required();
        }
        sub->callback([&chosen, &cmd] { chosen = &cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Args args{raw, seed, budget};
    try {
        const std::string key = args.canonical(chosen->name);
        std::optional<ResultCache> cache;
        if (!cache_dir.empty())
            cache.emplace(cache_dir);
        require(!verify || cache, ErrorKind::InvalidArgument, "--verify-cache needs --cache-dir");

        std::optional<CachedResult> hit = cache ? cache->load(key) : std::nullopt;
        CachedResult result;
        if (hit && !verify) {
            result = *hit;
        } else {
            result = chosen->run(args);
            if (hit && (hit->value.dump() != result.value.dump() || hit->exit_code != result.exit_code)) {
                std::cerr << "cache divergence for " << key << " (" << ResultCache::hash(key) << ")\n";
                return kCheckFailed;
            }
            if (cache && !hit)
                cache->store(key, result);
        }
        emit(result.value, json);
        return result.exit_code;
    } catch (const Error& e) {
        if (json)
            std::cout << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << '\n';
        else
            std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}
