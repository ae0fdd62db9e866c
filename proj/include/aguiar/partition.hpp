#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "aguiar/checked.hpp"
#include "aguiar/error.hpp"

namespace aguiar {

/// Weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
///
/// Ordering is lexicographic on the part sequence; within a fixed weight,
/// descending lexicographic order is the "reverse lexicographic" order used
/// for every enumeration and printed table in this library.
class Partition {
  public:
    Partition() = default;

    /// Throws ParseError on a zero/negative part or a strict increase.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw ParseError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw ParseError("partition parts must be weakly decreasing");
            weight_ = checked_add(weight_, parts_[i]);
        }
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    [[nodiscard]] int weight() const noexcept { return weight_; }
    [[nodiscard]] int length() const noexcept {
        return static_cast<int>(parts_.size());
    }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part access; parts past the length read as 0.
    [[nodiscard]] int part(std::ptrdiff_t i) const noexcept {
        if (i < 1 || i > static_cast<std::ptrdiff_t>(parts_.size()))
            return 0;
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    /// Sum of part(from) .. part(to), 1-based inclusive; empty when to < from.
    [[nodiscard]] int part_sum(std::ptrdiff_t from, std::ptrdiff_t to) const noexcept {
        int s = 0;
        for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(from, 1);
             i <= to && i <= length(); ++i)
            s += part(i);
        return s;
    }

    [[nodiscard]] Partition conjugate() const {
        std::vector<int> out;
        if (!parts_.empty()) {
            out.resize(static_cast<std::size_t>(parts_.front()), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j)
                    ++out[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(out));
    }

    /// Young-diagram containment: this ⊆ other.
    [[nodiscard]] bool contained_in(const Partition &other) const noexcept {
        if (length() > other.length())
            return false;
        for (int i = 1; i <= length(); ++i)
            if (part(i) > other.part(i))
                return false;
        return true;
    }

    friend bool operator==(const Partition &a, const Partition &b) noexcept {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition &a,
                                            const Partition &b) noexcept {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Reverse lexicographic ordering, (n) first and (1^n) last.
struct RevLex {
    bool operator()(const Partition &a, const Partition &b) const noexcept {
        return b < a;
    }
};

/// Canonical text form: brackets, comma separated, no spaces.
inline std::string to_string(const Partition &p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.parts()[i]);
    }
    s += ']';
    return s;
}

namespace detail {
inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}
} // namespace detail

/// Accepts "[7,3]", "7,3", "[]" and "". Rejects unsorted input instead of
/// sorting it.
inline Partition parse_partition(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw ParseError("unbalanced bracket in partition '" + std::string(text) + "'");
        s = detail::trim(s.substr(1, s.size() - 2));
    } else if (!s.empty() && s.back() == ']') {
        throw ParseError("unbalanced bracket in partition '" + std::string(text) + "'");
    }
    std::vector<int> parts;
    if (s.empty())
        return Partition{};
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok =
            detail::trim(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                       : comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("malformed partition token '" + std::string(tok) + "' in '" +
                             std::string(text) + "'");
        if (value <= 0)
            throw ParseError("partition parts must be positive: '" + std::string(text) + "'");
        if (!parts.empty() && value > parts.back())
            throw ParseError("partition parts not weakly decreasing: '" + std::string(text) +
                             "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int> &cur,
                           std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

struct PartitionListCache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const std::vector<Partition>>> lists;
};

inline PartitionListCache &partition_list_cache() {
    static PartitionListCache cache;
    return cache;
}
} // namespace detail

/// All partitions of n in reverse lexicographic order. The returned list is
/// shared and immutable.
inline const std::vector<Partition> &all_partitions(int n) {
    if (n < 0)
        throw DomainError("all_partitions: negative degree");
    auto &cache = detail::partition_list_cache();
    std::lock_guard lock(cache.mutex);
    auto it = cache.lists.find(n);
    if (it == cache.lists.end()) {
        auto list = std::make_shared<std::vector<Partition>>();
        std::vector<int> cur;
        detail::partitions_rec(n, n, cur, *list);
        it = cache.lists.emplace(n, std::move(list)).first;
    }
    return *it->second;
}

/// Index of p within all_partitions(p.weight()).
inline std::size_t partition_index(const Partition &p) {
    const auto &list = all_partitions(p.weight());
    auto it = std::lower_bound(list.begin(), list.end(), p, RevLex{});
    return static_cast<std::size_t>(it - list.begin());
}

/// Componentwise base + d·direction with zero padding.
inline Partition add_scaled(const Partition &base, const Partition &direction, int d) {
    if (d < 0)
        throw DomainError("add_scaled: negative scale");
    const int len = std::max(base.length(), direction.length());
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i)
        out[static_cast<std::size_t>(i - 1)] =
            checked_add(base.part(i), checked_mul(d, direction.part(i)));
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return Partition(std::move(out));
}

/// Multiset union of the parts of a and b.
inline Partition merge_parts(const Partition &a, const Partition &b) {
    std::vector<int> out;
    out.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(out), std::greater<>{});
    return Partition(std::move(out));
}

/// A partition read as a conjugacy class of the symmetric group, with the
/// multiplicity table cached.
class CycleType {
  public:
    struct Block {
        int length;
        int count;
        friend bool operator==(const Block &, const Block &) = default;
    };

    CycleType() = default;
    explicit CycleType(Partition p) : shape_(std::move(p)) {
        for (int part : shape_.parts()) {
            if (!blocks_.empty() && blocks_.back().length == part)
                ++blocks_.back().count;
            else
                blocks_.push_back({part, 1});
        }
    }

    [[nodiscard]] const Partition &shape() const noexcept { return shape_; }
    [[nodiscard]] int degree() const noexcept { return shape_.weight(); }
    /// (cycle length, multiplicity) pairs, longest cycles first.
    [[nodiscard]] std::span<const Block> blocks() const noexcept { return blocks_; }

    /// Π_j j^{m_j} · m_j!
    [[nodiscard]] Wide centralizer_order() const {
        Wide z = 1;
        for (const Block &b : blocks_) {
            for (int c = 1; c <= b.count; ++c)
                z = checked_mul(z, static_cast<Wide>(b.length) * c);
        }
        return z;
    }

    /// n!/z, the size of the conjugacy class.
    [[nodiscard]] Wide class_size() const {
        return exact_div(factorial(degree()), centralizer_order(), "class_size");
    }

    /// (-1)^{n - number of cycles}
    [[nodiscard]] int sign() const noexcept {
        return ((degree() - shape_.length()) % 2 == 0) ? 1 : -1;
    }

    friend bool operator==(const CycleType &a, const CycleType &b) noexcept {
        return a.shape_ == b.shape_;
    }

  private:
    Partition shape_;
    std::vector<Block> blocks_;
};

inline Wide centralizer_order(const CycleType &rho) { return rho.centralizer_order(); }

inline std::string to_string(const CycleType &rho) { return to_string(rho.shape()); }

/// One way to distribute the cycles of ρ over three labelled slots.
struct CycleSplit {
    CycleType first;
    CycleType middle;
    CycleType last;
    /// z_ρ / (z_first · z_middle · z_last) = Π_j multinomial(m_j; a_j, b_j, c_j)
    Wide weight = 1;
};

namespace detail {
inline Wide binomial(int n, int k) {
    Wide r = 1;
    for (int j = 1; j <= k; ++j)
        r = checked_mul(r, static_cast<Wide>(n - k + j)) / j;
    return r;
}

// sizes[s] < 0 means "unconstrained".
inline void split3_rec(std::span<const CycleType::Block> blocks, std::size_t idx,
                       std::array<std::vector<int>, 3> &slots, std::array<int, 3> &used,
                       const std::array<int, 3> &sizes, Wide weight,
                       std::vector<CycleSplit> &out) {
    if (idx == blocks.size()) {
        for (int s = 0; s < 3; ++s)
            if (sizes[s] >= 0 && used[s] != sizes[s])
                return;
        out.push_back({CycleType(Partition(slots[0])), CycleType(Partition(slots[1])),
                       CycleType(Partition(slots[2])), weight});
        return;
    }
    const auto [len, count] = blocks[idx];
    for (int a = 0; a <= count; ++a) {
        for (int b = 0; a + b <= count; ++b) {
            const int c = count - a - b;
            const std::array<int, 3> take{a, b, c};
            bool ok = true;
            for (int s = 0; s < 3; ++s)
                if (sizes[s] >= 0 && used[s] + take[s] * len > sizes[s])
                    ok = false;
            if (!ok)
                continue;
            for (int s = 0; s < 3; ++s) {
                slots[s].insert(slots[s].end(), static_cast<std::size_t>(take[s]), len);
                used[s] += take[s] * len;
            }
            const Wide w = checked_mul(weight, checked_mul(binomial(count, a),
                                                           binomial(count - a, b)));
            split3_rec(blocks, idx + 1, slots, used, sizes, w, out);
            for (int s = 0; s < 3; ++s) {
                slots[s].resize(slots[s].size() - static_cast<std::size_t>(take[s]));
                used[s] -= take[s] * len;
            }
        }
    }
}
} // namespace detail

/// Every ordered triple of sub-multisets whose union is the multiset of
/// cycles of ρ, each exactly once.
inline std::vector<CycleSplit> split3(const CycleType &rho) {
    std::vector<CycleSplit> out;
    std::array<std::vector<int>, 3> slots;
    std::array<int, 3> used{0, 0, 0};
    detail::split3_rec(rho.blocks(), 0, slots, used, {-1, -1, -1}, 1, out);
    return out;
}

/// split3 restricted to triples whose slot degrees are exactly the given sizes.
inline std::vector<CycleSplit> split3_sized(const CycleType &rho, int first, int middle,
                                            int last) {
    std::vector<CycleSplit> out;
    if (first < 0 || middle < 0 || last < 0 || first + middle + last != rho.degree())
        return out;
    std::array<std::vector<int>, 3> slots;
    std::array<int, 3> used{0, 0, 0};
    detail::split3_rec(rho.blocks(), 0, slots, used, {first, middle, last}, 1, out);
    return out;
}

} // namespace aguiar
