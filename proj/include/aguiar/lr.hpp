#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "aguiar/checked.hpp"
#include "aguiar/memo.hpp"
#include "aguiar/partition.hpp"

namespace aguiar {

/// Sparse linear combination of irreducibles of one degree, positive
/// coefficients only, in reverse lexicographic order.
using Expansion = std::map<Partition, Int, RevLex>;

namespace detail {

inline Memo<Int> &lr_memo() {
    static Memo<Int> memo;
    return memo;
}

inline Memo<std::shared_ptr<const Expansion>> &lr_expansion_memo() {
    static Memo<std::shared_ptr<const Expansion>> memo;
    return memo;
}

// Backtracking count of Littlewood–Richardson tableaux of shape nu/lambda and
// content mu. Cells are visited row by row from the top, right to left inside
// a row, which is the reverse reading word; the lattice condition is checked
// as each letter is placed.
class LrFiller {
  public:
    LrFiller(const Partition &lambda, const Partition &mu, const Partition &nu)
        : lambda_(lambda), mu_(mu), nu_(nu), count_(static_cast<std::size_t>(mu.length()) + 1, 0) {
        grid_.resize(static_cast<std::size_t>(nu.length()) + 1);
        for (int r = 1; r <= nu.length(); ++r)
            grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu.part(r)) + 2, 0);
    }

    Int count() { return fill(1, nu_.part(1)); }

  private:
    [[nodiscard]] bool in_skew(int r, int c) const {
        return r >= 1 && r <= nu_.length() && c > lambda_.part(r) && c <= nu_.part(r);
    }

    int &cell(int r, int c) {
        return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    Int fill(int r, int c) {
        if (r > nu_.length())
            return 1;
        if (c <= lambda_.part(r))
            return fill(r + 1, nu_.part(r + 1));

        int hi = std::min(mu_.length(), r);
        if (in_skew(r, c + 1))
            hi = std::min(hi, cell(r, c + 1));
        int lo = 1;
        if (in_skew(r - 1, c))
            lo = cell(r - 1, c) + 1;

        Int total = 0;
        for (int v = lo; v <= hi; ++v) {
            auto &cv = count_[static_cast<std::size_t>(v)];
            if (cv + 1 > mu_.part(v))
                continue;
            if (v > 1 && cv + 1 > count_[static_cast<std::size_t>(v - 1)])
                continue;
            ++cv;
            cell(r, c) = v;
            total = checked_add(total, fill(r, c - 1));
            --cv;
        }
        cell(r, c) = 0;
        return total;
    }

    const Partition &lambda_;
    const Partition &mu_;
    const Partition &nu_;
    std::vector<int> count_;
    std::vector<std::vector<int>> grid_;
};

inline void add_horizontal_strips(const Partition &shape, int size,
                                  std::set<Partition, RevLex> &out) {
    std::vector<int> parts(shape.parts().begin(), shape.parts().end());
    parts.push_back(0);
    std::vector<int> grown = parts;
    auto rec = [&](auto &&self, std::size_t row, int left) -> void {
        if (row == parts.size()) {
            if (left == 0) {
                std::vector<int> p;
                for (int x : grown)
                    if (x > 0)
                        p.push_back(x);
                out.insert(Partition(std::move(p)));
            }
            return;
        }
        const int room = row == 0 ? left : std::min(left, parts[row - 1] - parts[row]);
        for (int add = room; add >= 0; --add) {
            grown[row] = parts[row] + add;
            self(self, row + 1, left - add);
        }
        grown[row] = parts[row];
    };
    rec(rec, 0, size);
}

} // namespace detail

/// c_{λ,μ}^ν. Zero for mismatched weights or when λ or μ does not fit in ν.
inline Int lr_coefficient(const Partition &lambda, const Partition &mu, const Partition &nu) {
    if (nu.weight() != lambda.weight() + mu.weight())
        return 0;
    if (!lambda.contained_in(nu) || !mu.contained_in(nu))
        return 0;
    if (mu.empty() || lambda.empty())
        return 1;
    const std::string key = to_string(lambda) + to_string(mu) + to_string(nu);
    return detail::lr_memo().get_or_compute(
        key, [&] { return detail::LrFiller(lambda, mu, nu).count(); });
}

/// All ν with c_{λ,μ}^ν > 0. Candidates are the shapes reachable from λ by
/// successive horizontal strips of sizes μ_1, μ_2, ...
inline std::shared_ptr<const Expansion> lr_expand_pair_ptr(const Partition &lambda,
                                                           const Partition &mu) {
    const std::string key = to_string(lambda) + to_string(mu);
    return detail::lr_expansion_memo().get_or_compute(key, [&] {
        std::set<Partition, RevLex> frontier{lambda};
        for (int m : mu.parts()) {
            std::set<Partition, RevLex> next;
            for (const Partition &shape : frontier)
                detail::add_horizontal_strips(shape, m, next);
            frontier = std::move(next);
        }
        auto out = std::make_shared<Expansion>();
        for (const Partition &nu : frontier)
            if (Int c = lr_coefficient(lambda, mu, nu); c > 0)
                out->emplace(nu, c);
        return std::shared_ptr<const Expansion>(std::move(out));
    });
}

inline Expansion lr_expand_pair(const Partition &lambda, const Partition &mu) {
    return *lr_expand_pair_ptr(lambda, mu);
}

} // namespace aguiar
