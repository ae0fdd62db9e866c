#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "aguiar/characters.hpp"
#include "aguiar/error.hpp"
#include "aguiar/partition.hpp"

namespace aguiar {

// Text format:
//   AGUIAR-CHARTAB v1
//   n|λ|ρ|value        one line per table entry, rows and columns in
//                      reverse lexicographic order
inline constexpr std::string_view chartab_magic = "AGUIAR-CHARTAB";
inline constexpr std::string_view chartab_header = "AGUIAR-CHARTAB v1";

inline void write_tables(std::ostream &os, const std::vector<CharacterTable> &tables) {
    os << chartab_header << '\n';
    for (const CharacterTable &t : tables) {
        const auto &shapes = all_partitions(t.degree());
        for (std::size_t i = 0; i < shapes.size(); ++i)
            for (std::size_t j = 0; j < shapes.size(); ++j)
                os << t.degree() << '|' << to_string(shapes[i]) << '|' << to_string(shapes[j])
                   << '|' << t.rows()[i].values[j] << '\n';
    }
}

namespace detail {
[[noreturn]] inline void cache_fail(std::size_t line, const std::string &msg) {
    throw CacheError("line " + std::to_string(line) + ": " + msg);
}

template <class T>
T parse_number(std::string_view tok, std::size_t line) {
    T v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        cache_fail(line, "malformed number '" + std::string(tok) + "'");
    return v;
}
} // namespace detail

/// Reads every table in the stream. Rejects unknown versions, malformed
/// lines, duplicate entries and incomplete tables; messages name the line.
inline std::vector<CharacterTable> read_tables(std::istream &is) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line))
        detail::cache_fail(1, "missing header");
    ++lineno;
    if (line != chartab_header) {
        if (line.rfind(chartab_magic, 0) == 0)
            detail::cache_fail(lineno, "unsupported cache version '" + line + "'");
        detail::cache_fail(lineno, "not a character table cache");
    }

    struct Pending {
        std::vector<std::vector<Int>> values;
        std::vector<std::vector<bool>> seen;
        std::size_t filled = 0;
    };
    std::map<int, Pending> pending;

    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        for (std::size_t bar; (bar = rest.find('|')) != std::string_view::npos;) {
            fields.push_back(rest.substr(0, bar));
            rest.remove_prefix(bar + 1);
        }
        fields.push_back(rest);
        if (fields.size() != 4)
            detail::cache_fail(lineno, "expected 4 '|'-separated fields");
        const int n = detail::parse_number<int>(fields[0], lineno);
        Partition lambda, rho;
        try {
            lambda = parse_partition(fields[1]);
            rho = parse_partition(fields[2]);
        } catch (const ParseError &e) {
            detail::cache_fail(lineno, e.what());
        }
        const Int value = detail::parse_number<Int>(fields[3], lineno);
        if (n < 0 || lambda.weight() != n || rho.weight() != n)
            detail::cache_fail(lineno, "weights do not match degree " + std::to_string(n));

        auto &p = pending[n];
        if (p.values.empty()) {
            const std::size_t size = all_partitions(n).size();
            p.values.assign(size, std::vector<Int>(size, 0));
            p.seen.assign(size, std::vector<bool>(size, false));
        }
        const std::size_t i = partition_index(lambda);
        const std::size_t j = partition_index(rho);
        if (p.seen[i][j])
            detail::cache_fail(lineno, "duplicate entry " + to_string(lambda) + "|" +
                                           to_string(rho));
        p.seen[i][j] = true;
        p.values[i][j] = value;
        ++p.filled;
    }

    std::vector<CharacterTable> tables;
    for (auto &[n, p] : pending) {
        if (p.filled != p.values.size() * p.values.size())
            detail::cache_fail(lineno, "table for degree " + std::to_string(n) +
                                           " is incomplete (truncated file?)");
        std::vector<ClassFunction> rows;
        for (auto &row : p.values) {
            ClassFunction f(n);
            f.values = std::move(row);
            rows.push_back(std::move(f));
        }
        tables.emplace_back(n, std::move(rows));
    }
    return tables;
}

inline void save_cache(const std::filesystem::path &path,
                       const std::vector<CharacterTable> &tables) {
    std::ofstream os(path);
    if (!os)
        throw CacheError("cannot open " + path.string() + " for writing");
    write_tables(os, tables);
    if (!os)
        throw CacheError("write to " + path.string() + " failed");
}

inline std::vector<CharacterTable> load_cache(const std::filesystem::path &path) {
    std::ifstream is(path);
    if (!is)
        throw CacheError("cannot open " + path.string());
    return read_tables(is);
}

} // namespace aguiar
