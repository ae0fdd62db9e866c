#pragma once

// Command-line front end. Kept out of include/ so the library itself does not
// depend on CLI11 or nlohmann/json.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aguiar/aguiar.hpp"

namespace aguiar::cli {

inline constexpr const char *cache_env_var = "AGUIAR_CACHE_DIR";
inline constexpr const char *cache_file_name = "chartab.txt";

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

namespace detail {

using json = nlohmann::ordered_json;

// Splits "[2],[1],[1,1]" at commas outside brackets.
inline std::vector<std::string> split_top_level(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[')
            ++depth;
        if (c == ']')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline Triple parse_triple(const std::string &s) {
    auto parts = split_top_level(s);
    if (parts.size() != 3)
        throw ParseError("--triple expects three bracketed partitions, e.g. [1],[1],[1]");
    return {parse_partition(parts[0]), parse_partition(parts[1]), parse_partition(parts[2])};
}

inline std::optional<BoundContext> parse_dims(const std::string &s) {
    if (s == "auto")
        return std::nullopt;
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ParseError("--dims expects 'auto' or 'n1,n2'");
    try {
        std::size_t used1 = 0, used2 = 0;
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        BoundContext ctx{std::stoi(a, &used1), std::stoi(b, &used2)};
        if (used1 != a.size() || used2 != b.size())
            throw ParseError("--dims expects 'auto' or 'n1,n2'");
        return ctx;
    } catch (const std::logic_error &) {
        throw ParseError("--dims expects 'auto' or 'n1,n2'");
    }
}

inline json expansion_json(const Expansion &e) {
    json j = json::object();
    for (const auto &[p, m] : e)
        j[to_string(p)] = m;
    return j;
}

inline std::filesystem::path cache_path(const std::string &dir) {
    return std::filesystem::path(dir) / cache_file_name;
}

inline void load_cache_dir(const std::string &dir) {
    const auto path = cache_path(dir);
    if (!std::filesystem::exists(path))
        return;
    for (const CharacterTable &t : load_cache(path))
        install_character_table(t);
}

inline void save_cache_dir(const std::string &dir) {
    std::filesystem::create_directories(dir);
    std::vector<CharacterTable> tables;
    for (int n : built_table_degrees())
        tables.push_back(character_table(n));
    save_cache(cache_path(dir), tables);
}

} // namespace detail

/// Runs one CLI invocation. args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    using detail::json;

    CLI::App app{"Heisenberg products, Aguiar coefficients and their stabilisation bounds",
                 "aguiar"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::string cache_dir;
    int max_degree = default_degree_limit;
    app.add_flag("--json", as_json, "Emit one JSON object");
    app.add_option("--cache-dir", cache_dir, "Directory holding the character-table cache")
        ->envname(cache_env_var);
    app.add_option("--max-degree", max_degree, "Largest symmetric-group degree evaluated")
        ->check(CLI::NonNegativeNumber);

    std::string a1, a2, a3;
    int n_arg = 0;
    std::string method = "formula";
    std::optional<int> level;
    int dmax = 0;
    std::string triple_text;
    std::string bound_kind;
    std::string dims = "auto";

    auto *partitions_cmd = app.add_subcommand("partitions", "List the partitions of n");
    partitions_cmd->add_option("n", n_arg)->required()->check(CLI::NonNegativeNumber);

    auto *char_cmd = app.add_subcommand("char", "Irreducible character value chi^lambda(rho)");
    char_cmd->add_option("lambda", a1)->required();
    char_cmd->add_option("rho", a2)->required();

    auto *lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    auto *kron_cmd = app.add_subcommand("kron", "Kronecker coefficient");
    auto *aguiar_cmd = app.add_subcommand("aguiar", "Aguiar coefficient a_{lambda,mu}^nu");
    for (auto *cmd : {lr_cmd, kron_cmd, aguiar_cmd}) {
        cmd->add_option("lambda", a1)->required();
        cmd->add_option("mu", a2)->required();
        cmd->add_option("nu", a3)->required();
    }
    aguiar_cmd->add_option("--method", method, "formula, induction or both")
        ->check(CLI::IsMember({"formula", "induction", "both"}));

    auto *heis_cmd = app.add_subcommand("heisenberg", "Heisenberg product M_lambda # M_mu");
    heis_cmd->add_option("lambda", a1)->required();
    heis_cmd->add_option("mu", a2)->required();
    heis_cmd->add_option("--level", level, "Only the component of this degree");

    auto *stable_cmd =
        app.add_subcommand("stable-check", "Test a_{d alpha, d beta}^{d gamma} = 1 for d <= dmax");
    stable_cmd->add_option("alpha", a1)->required();
    stable_cmd->add_option("beta", a2)->required();
    stable_cmd->add_option("gamma", a3)->required();
    stable_cmd->add_option("--dmax", dmax)->required()->check(CLI::PositiveNumber);

    auto *scan_cmd = app.add_subcommand("scan", "Shifted sequence and its empirical onset");
    scan_cmd->add_option("lambda", a1)->required();
    scan_cmd->add_option("mu", a2)->required();
    scan_cmd->add_option("nu", a3)->required();
    scan_cmd->add_option("--triple", triple_text, "alpha,beta,gamma e.g. [1],[1],[1]")
        ->required();
    scan_cmd->add_option("--dmax", dmax)->required()->check(CLI::NonNegativeNumber);

    auto *bound_cmd = app.add_subcommand("bound", "Stabilisation bound");
    bound_cmd->add_option("name", bound_kind)
        ->required()
        ->check(CLI::IsMember(
            {"ying", "ying-module", "murnaghan", "murnaghan-improved", "t22", "t23"}));
    bound_cmd->add_option("lambda", a1)->required();
    bound_cmd->add_option("mu", a2)->required();
    bound_cmd->add_option("nu", a3, "nu, or the level i for ying-module")->required();
    bound_cmd->add_option("--dims", dims, "auto or n1,n2");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n"
            << "subcommands: partitions, char, lr, kron, aguiar, heisenberg, stable-check, "
               "scan, bound\n";
        return usage_error;
    }

    set_degree_limit(max_degree);
    json query = json::object();
    json result;
    std::string method_name;
    std::ostringstream text;
    int code = ok;
    const auto start = std::chrono::steady_clock::now();

    try {
        if (!cache_dir.empty())
            detail::load_cache_dir(cache_dir);

        if (*partitions_cmd) {
            query = {{"command", "partitions"}, {"n", n_arg}};
            method_name = "enumeration";
            result = json::array();
            for (const Partition &p : all_partitions(n_arg)) {
                result.push_back(to_string(p));
                text << to_string(p) << '\n';
            }
        } else if (*char_cmd) {
            const Partition lambda = parse_partition(a1), rho = parse_partition(a2);
            query = {{"command", "char"}, {"lambda", to_string(lambda)}, {"rho", to_string(rho)}};
            method_name = "murnaghan-nakayama";
            const Int v = character_value(lambda, CycleType(rho));
            result = v;
            text << v << '\n';
        } else if (*lr_cmd || *kron_cmd) {
            const Partition lambda = parse_partition(a1), mu = parse_partition(a2),
                            nu = parse_partition(a3);
            const bool is_lr = lr_cmd->parsed();
            query = {{"command", is_lr ? "lr" : "kron"},
                     {"lambda", to_string(lambda)},
                     {"mu", to_string(mu)},
                     {"nu", to_string(nu)}};
            method_name = is_lr ? "tableaux" : "character-sum";
            const Int v = is_lr ? lr_coefficient(lambda, mu, nu)
                                : kronecker_coefficient(lambda, mu, nu);
            result = v;
            text << v << '\n';
        } else if (*aguiar_cmd) {
            const AguiarQuery q{parse_partition(a1), parse_partition(a2), parse_partition(a3)};
            query = {{"command", "aguiar"},
                     {"lambda", to_string(q.lambda)},
                     {"mu", to_string(q.mu)},
                     {"nu", to_string(q.nu)}};
            method_name = method;
            if (method == "both") {
                const Int f = aguiar_formula(q);
                const Int g = aguiar_induction(q);
                const bool match = f == g;
                result = {{"formula", f}, {"induction", g}, {"match", match}};
                text << "formula " << f << "\ninduction " << g << '\n'
                     << (match ? "MATCH" : "MISMATCH") << '\n';
                if (!match)
                    code = domain_error;
            } else {
                const Int v = method == "formula" ? aguiar_formula(q) : aguiar_induction(q);
                result = v;
                text << v << '\n';
            }
        } else if (*heis_cmd) {
            const Partition lambda = parse_partition(a1), mu = parse_partition(a2);
            query = {{"command", "heisenberg"}, {"lambda", to_string(lambda)}, {"mu", to_string(mu)}};
            method_name = "formula";
            const VirtualModule m = heisenberg_irreducible(lambda, mu);
            if (level) {
                query["level"] = *level;
                const Expansion e = m.level(*level);
                result = detail::expansion_json(e);
                for (const auto &[nu, a] : e)
                    text << to_string(nu) << ' ' << a << '\n';
            } else {
                result = json::object();
                for (const auto &[i, e] : m.levels()) {
                    result[std::to_string(i)] = detail::expansion_json(e);
                    for (const auto &[nu, a] : e)
                        text << i << ' ' << to_string(nu) << ' ' << a << '\n';
                }
            }
        } else if (*stable_cmd) {
            const Triple t{parse_partition(a1), parse_partition(a2), parse_partition(a3)};
            query = {{"command", "stable-check"}, {"triple", to_string(t)}, {"dmax", dmax}};
            method_name = "formula";
            const HypothesisCheck h = check_stable_hypothesis(t, dmax);
            result = {{"holds", h.holds}, {"values", h.values}};
            if (h.failing_d) {
                result["failing_d"] = *h.failing_d;
                result["failing_value"] = h.failing_value;
                text << "false (d=" << *h.failing_d << ", value=" << h.failing_value << ")\n";
            } else {
                text << "true\n";
            }
        } else if (*scan_cmd) {
            const Partition lambda = parse_partition(a1), mu = parse_partition(a2),
                            nu = parse_partition(a3);
            const Triple t = detail::parse_triple(triple_text);
            query = {{"command", "scan"},
                     {"lambda", to_string(lambda)},
                     {"mu", to_string(mu)},
                     {"nu", to_string(nu)},
                     {"triple", to_string(t)},
                     {"dmax", dmax}};
            method_name = "formula";
            const StabilityReport r = scan_sequence(lambda, mu, nu, t, dmax);
            result = {{"values", r.values},
                      {"empirical_onset", r.empirical_onset},
                      {"inconclusive", r.inconclusive},
                      {"bound_predictions", r.bound_predictions}};
            text << "values";
            for (Int v : r.values)
                text << ' ' << v;
            text << "\nonset " << r.empirical_onset << (r.inconclusive ? " (inconclusive)" : "")
                 << '\n';
            for (const auto &[name, b] : r.bound_predictions)
                text << name << ' ' << b << '\n';
        } else if (*bound_cmd) {
            const Partition lambda = parse_partition(a1), mu = parse_partition(a2);
            method_name = bound_kind;
            long value = 0;
            query = {{"command", "bound"}, {"name", bound_kind},
                     {"lambda", to_string(lambda)}, {"mu", to_string(mu)}};
            if (bound_kind == "ying-module") {
                int i = 0;
                try {
                    i = std::stoi(a3);
                } catch (const std::logic_error &) {
                    throw ParseError("ying-module expects an integer level, got '" + a3 + "'");
                }
                query["i"] = i;
                value = ying_module_bound(lambda, mu, i);
            } else {
                const Partition nu = parse_partition(a3);
                const BoundKind kind = *parse_bound_kind(bound_kind);
                const auto ctx = detail::parse_dims(dims);
                const BoundContext used = ctx ? *ctx : minimal_context(lambda, mu, nu, bound_triple(kind));
                query["nu"] = to_string(nu);
                if (kind != BoundKind::ying)
                    query["dims"] = to_string(used);
                value = evaluate_bound(kind, lambda, mu, nu, used);
            }
            result = value;
            text << value << '\n';
        }

        if (!cache_dir.empty())
            detail::save_cache_dir(cache_dir);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (as_json) {
        json j = {{"query", query}, {"result", result}, {"method", method_name}, {"timings_ms", ms}};
        out << j.dump() << '\n';
    } else {
        out << text.str();
    }
    return code;
}

} // namespace aguiar::cli
