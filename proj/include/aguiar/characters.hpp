#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "aguiar/checked.hpp"
#include "aguiar/error.hpp"
#include "aguiar/memo.hpp"
#include "aguiar/partition.hpp"

namespace aguiar {

inline constexpr int default_degree_limit = 14;

namespace detail {
inline std::atomic<int> &degree_limit_ref() {
    static std::atomic<int> limit{default_degree_limit};
    return limit;
}
} // namespace detail

/// Largest symmetric-group degree for which characters are evaluated.
inline int degree_limit() { return detail::degree_limit_ref().load(); }
inline void set_degree_limit(int n) { detail::degree_limit_ref().store(n); }

inline void check_degree(int n, const char *what) {
    if (n > degree_limit())
        throw LimitExceeded(std::string(what) + ": degree " + std::to_string(n) +
                            " exceeds configured limit " + std::to_string(degree_limit()));
}

/// Exact integer-valued class function on the symmetric group of degree n.
/// values[j] belongs to the cycle type all_partitions(n)[j].
struct ClassFunction {
    int n = 0;
    std::vector<Int> values;

    explicit ClassFunction(int degree = 0)
        : n(degree), values(all_partitions(degree).size(), 0) {}

    [[nodiscard]] Int at(const CycleType &rho) const {
        if (rho.degree() != n)
            throw DomainError("class function of degree " + std::to_string(n) +
                              " evaluated on " + to_string(rho));
        return values[partition_index(rho.shape())];
    }

    ClassFunction &operator+=(const ClassFunction &other) {
        if (other.n != n)
            throw DomainError("adding class functions of different degrees");
        for (std::size_t j = 0; j < values.size(); ++j)
            values[j] = checked_add(values[j], other.values[j]);
        return *this;
    }

    friend ClassFunction operator+(ClassFunction a, const ClassFunction &b) {
        a += b;
        return a;
    }

    friend bool operator==(const ClassFunction &, const ClassFunction &) = default;
};

namespace detail {

inline Memo<Int> &character_memo() {
    static Memo<Int> memo;
    return memo;
}

// Partitions obtained by removing one rim hook of the given size, with the
// Murnaghan–Nakayama sign (-1)^{height}.
struct HookRemoval {
    Partition rest;
    int sign;
};

inline std::vector<HookRemoval> remove_rim_hooks(const Partition &lambda, int size) {
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int j = 1; j <= len; ++j)
        beta[static_cast<std::size_t>(j - 1)] = lambda.part(j) + (len - j);

    std::vector<HookRemoval> out;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        const int target = beta[j] - size;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int crossed = 0;
        for (int b : beta)
            if (b > target && b < beta[j])
                ++crossed;
        std::vector<int> moved = beta;
        moved[j] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>{});
        std::vector<int> parts;
        for (int k = 1; k <= len; ++k) {
            const int p = moved[static_cast<std::size_t>(k - 1)] - (len - k);
            if (p > 0)
                parts.push_back(p);
        }
        out.push_back({Partition(std::move(parts)), (crossed % 2 == 0) ? 1 : -1});
    }
    return out;
}

inline Int murnaghan_nakayama(const Partition &lambda, const Partition &rho) {
    if (rho.empty())
        return 1;
    const std::string key = to_string(lambda) + "|" + to_string(rho);
    return character_memo().get_or_compute(key, [&]() -> Int {
        // Largest cycle first; rho is stored weakly decreasing.
        const int r = rho.part(1);
        const Partition tail(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
        Int sum = 0;
        for (const auto &[rest, sign] : remove_rim_hooks(lambda, r))
            sum = checked_add(sum, checked_mul(static_cast<Int>(sign),
                                               murnaghan_nakayama(rest, tail)));
        return sum;
    });
}

} // namespace detail

/// χ^λ(ρ) by the Murnaghan–Nakayama rule, memoized on (λ, ρ).
inline Int character_value(const Partition &lambda, const CycleType &rho) {
    if (lambda.weight() != rho.degree())
        throw DomainError("character_value: weight of " + to_string(lambda) +
                          " differs from degree of " + to_string(rho));
    check_degree(lambda.weight(), "character_value");
    return detail::murnaghan_nakayama(lambda, rho.shape());
}

inline Int character_value(const Partition &lambda, const Partition &rho) {
    return character_value(lambda, CycleType(rho));
}

/// Full character table of degree n. Rows and columns both follow
/// all_partitions(n) order.
class CharacterTable {
  public:
    CharacterTable() = default;
    CharacterTable(int n, std::vector<ClassFunction> rows) : n_(n), rows_(std::move(rows)) {}

    [[nodiscard]] int degree() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
    [[nodiscard]] const std::vector<ClassFunction> &rows() const noexcept { return rows_; }

    [[nodiscard]] const ClassFunction &row(const Partition &lambda) const {
        if (lambda.weight() != n_)
            throw DomainError("no row " + to_string(lambda) + " in degree-" +
                              std::to_string(n_) + " table");
        return rows_[partition_index(lambda)];
    }
    [[nodiscard]] Int value(const Partition &lambda, const CycleType &rho) const {
        return row(lambda).at(rho);
    }
    /// χ^λ(1^n)
    [[nodiscard]] Int dimension(const Partition &lambda) const {
        return row(lambda).values.back();
    }

    friend bool operator==(const CharacterTable &, const CharacterTable &) = default;

  private:
    int n_ = 0;
    std::vector<ClassFunction> rows_;
};

namespace detail {
struct TableCache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const CharacterTable>> tables;
};
inline TableCache &table_cache() {
    static TableCache cache;
    return cache;
}
} // namespace detail

inline ClassFunction character(const Partition &lambda) {
    check_degree(lambda.weight(), "character");
    ClassFunction f(lambda.weight());
    const auto &classes = all_partitions(lambda.weight());
    for (std::size_t j = 0; j < classes.size(); ++j)
        f.values[j] = detail::murnaghan_nakayama(lambda, classes[j]);
    return f;
}

/// Cached, immutable once built.
inline std::shared_ptr<const CharacterTable> character_table_ptr(int n) {
    if (n < 0)
        throw DomainError("character_table: negative degree");
    check_degree(n, "character_table");
    auto &cache = detail::table_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.tables.find(n); it != cache.tables.end())
            return it->second;
    }
    std::vector<ClassFunction> rows;
    for (const Partition &lambda : all_partitions(n))
        rows.push_back(character(lambda));
    auto table = std::make_shared<const CharacterTable>(n, std::move(rows));
    std::lock_guard lock(cache.mutex);
    return cache.tables.try_emplace(n, std::move(table)).first->second;
}

inline const CharacterTable &character_table(int n) { return *character_table_ptr(n); }

/// Degrees whose full tables have been materialized so far.
inline std::vector<int> built_table_degrees() {
    auto &cache = detail::table_cache();
    std::lock_guard lock(cache.mutex);
    std::vector<int> out;
    for (const auto &[n, table] : cache.tables)
        out.push_back(n);
    return out;
}

/// Seeds the table cache and the character memo from an externally loaded
/// table. Entries already present are kept.
inline void install_character_table(const CharacterTable &table) {
    const auto &shapes = all_partitions(table.degree());
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (std::size_t j = 0; j < shapes.size(); ++j)
            if (!shapes[j].empty())
                detail::character_memo().put(to_string(shapes[i]) + "|" + to_string(shapes[j]),
                                             table.rows()[i].values[j]);
    auto &cache = detail::table_cache();
    std::lock_guard lock(cache.mutex);
    cache.tables.try_emplace(table.degree(), std::make_shared<const CharacterTable>(table));
}

/// <f, g> = (1/n!) Σ_ρ |class ρ| f(ρ) g(ρ); the quotient must be exact.
inline Int inner_product(const ClassFunction &f, const ClassFunction &g) {
    if (f.n != g.n)
        throw DomainError("inner_product: degrees " + std::to_string(f.n) + " and " +
                          std::to_string(g.n) + " differ");
    const auto &classes = all_partitions(f.n);
    Wide sum = 0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        const Wide term = checked_mul(static_cast<Wide>(f.values[j]),
                                      static_cast<Wide>(g.values[j]));
        sum = checked_add(sum, checked_mul(term, CycleType(classes[j]).class_size()));
    }
    return narrow(exact_div(sum, factorial(f.n), "inner_product"));
}

} // namespace aguiar
