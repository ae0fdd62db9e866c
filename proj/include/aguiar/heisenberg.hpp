#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aguiar/characters.hpp"
#include "aguiar/checked.hpp"
#include "aguiar/kronecker.hpp"
#include "aguiar/lr.hpp"
#include "aguiar/memo.hpp"
#include "aguiar/partition.hpp"

namespace aguiar {

/// Direct sum of irreducible modules over several symmetric groups, graded
/// by degree. Multiplicities are positive; zero entries are never stored.
class VirtualModule {
  public:
    VirtualModule() = default;

    /// M_λ with multiplicity one.
    static VirtualModule irreducible(const Partition &lambda) {
        VirtualModule m;
        m.add(lambda, 1);
        return m;
    }

    /// The unit: the trivial module of the symmetric group on zero letters.
    static VirtualModule unit() { return irreducible(Partition{}); }

    void add(const Partition &lambda, Int multiplicity) {
        if (multiplicity < 0)
            throw DomainError("VirtualModule: negative multiplicity");
        if (multiplicity == 0)
            return;
        Int &slot = levels_[lambda.weight()][lambda];
        slot = checked_add(slot, multiplicity);
    }

    void add(const VirtualModule &other, Int scale = 1) {
        for (const auto &[n, level] : other.levels_)
            for (const auto &[lambda, m] : level)
                add(lambda, checked_mul(m, scale));
    }

    [[nodiscard]] Int multiplicity(const Partition &lambda) const {
        auto lit = levels_.find(lambda.weight());
        if (lit == levels_.end())
            return 0;
        auto it = lit->second.find(lambda);
        return it == lit->second.end() ? 0 : it->second;
    }

    /// Component of degree n (empty expansion when absent).
    [[nodiscard]] Expansion level(int n) const {
        auto it = levels_.find(n);
        return it == levels_.end() ? Expansion{} : it->second;
    }

    [[nodiscard]] const std::map<int, Expansion> &levels() const noexcept { return levels_; }
    [[nodiscard]] bool empty() const noexcept { return levels_.empty(); }

    friend bool operator==(const VirtualModule &, const VirtualModule &) = default;

  private:
    std::map<int, Expansion> levels_;
};

/// "{1:{[1]:1},2:{[2]:1,[1,1]:1}}"
inline std::string to_string(const VirtualModule &m) {
    std::string s = "{";
    bool first_level = true;
    for (const auto &[n, level] : m.levels()) {
        if (!first_level)
            s += ',';
        first_level = false;
        s += std::to_string(n) + ":{";
        bool first = true;
        for (const auto &[lambda, mult] : level) {
            if (!first)
                s += ',';
            first = false;
            s += to_string(lambda) + ":" + std::to_string(mult);
        }
        s += '}';
    }
    return s + '}';
}

/// A coefficient request a_{λ,μ}^ν. Weight-incompatible queries are legal
/// and evaluate to 0.
struct AguiarQuery {
    Partition lambda;
    Partition mu;
    Partition nu;

    [[nodiscard]] int k() const noexcept { return lambda.weight(); }
    [[nodiscard]] int l() const noexcept { return mu.weight(); }
    [[nodiscard]] int i() const noexcept { return nu.weight(); }
    [[nodiscard]] bool compatible() const noexcept {
        return std::max(k(), l()) <= i() && i() <= k() + l();
    }
};

/// Sizes of the three blocks of the Young subgroup behind level i of
/// M_λ ♯ M_μ: S_{i-l} × S_{k+l-i} × S_{i-k}. The middle block is shared by
/// both factors.
struct LevelBlocks {
    int first;
    int middle;
    int last;
};

inline LevelBlocks level_blocks(int k, int l, int i) { return {i - l, k + l - i, i - k}; }

namespace detail {

// c_{x,y}^target over all x ⊢ first_size, y ⊢ second_size.
struct LrSplit {
    Partition x;
    Partition y;
    Int coefficient;
};

inline std::vector<LrSplit> lr_splits(const Partition &target, int first_size) {
    std::vector<LrSplit> out;
    const int second_size = target.weight() - first_size;
    if (first_size < 0 || second_size < 0)
        return out;
    for (const Partition &x : all_partitions(first_size)) {
        if (!x.contained_in(target))
            continue;
        for (const Partition &y : all_partitions(second_size))
            if (Int c = lr_coefficient(x, y, target); c > 0)
                out.push_back({x, y, c});
    }
    return out;
}

inline Memo<std::shared_ptr<const Expansion>> &aguiar_level_memo() {
    static Memo<std::shared_ptr<const Expansion>> memo;
    return memo;
}

// Drives the convolution
//   a_{λ,μ}^ν = Σ c_{α,β}^λ c_{η,ρ}^μ g_{β,η,δ} c_{α,δ}^τ c_{τ,ρ}^ν
// with every summand of nonzero weight pattern: |α| = i-l,
// |β| = |η| = |δ| = k+l-i, |ρ| = i-k, |τ| = k. The visitor receives
// (τ, ρ, weight) with weight = c_{α,β}^λ c_{η,ρ}^μ g_{β,η,δ} c_{α,δ}^τ and
// returns false to skip a τ early.
template <class Visit>
void for_each_convolution_term(const Partition &lambda, const Partition &mu, int i,
                               const Partition *nu_filter, Visit &&visit) {
    const auto [first, middle, last] = level_blocks(lambda.weight(), mu.weight(), i);
    const auto left = lr_splits(lambda, first);   // (α, β)
    const auto right = lr_splits(mu, middle);     // (η, ρ)
    for (const auto &[alpha, beta, c1] : left) {
        if (nu_filter && !alpha.contained_in(*nu_filter))
            continue;
        for (const auto &[eta, rho, c2] : right) {
            if (nu_filter && !rho.contained_in(*nu_filter))
                continue;
            const Int c12 = checked_mul(c1, c2);
            for (const auto &[delta, g] : *kronecker_expand_pair_ptr(beta, eta)) {
                const Int c123 = checked_mul(c12, g);
                for (const auto &[tau, c3] : *lr_expand_pair_ptr(alpha, delta)) {
                    if (nu_filter && !tau.contained_in(*nu_filter))
                        continue;
                    visit(tau, rho, checked_mul(c123, c3));
                }
            }
        }
    }
}

} // namespace detail

/// a_{λ,μ}^ν through the Littlewood–Richardson/Kronecker convolution.
inline Int aguiar_formula(const AguiarQuery &q) {
    if (!q.compatible())
        return 0;
    Int total = 0;
    detail::for_each_convolution_term(
        q.lambda, q.mu, q.i(), &q.nu, [&](const Partition &tau, const Partition &rho, Int w) {
            if (Int c4 = lr_coefficient(tau, rho, q.nu); c4 > 0)
                total = checked_add(total, checked_mul(w, c4));
        });
    return total;
}

inline Int aguiar_formula(const Partition &lambda, const Partition &mu, const Partition &nu) {
    return aguiar_formula(AguiarQuery{lambda, mu, nu});
}

/// All of level i of M_λ ♯ M_μ via the convolution; empty outside
/// max(k,l) ≤ i ≤ k+l.
inline std::shared_ptr<const Expansion> aguiar_level_ptr(const Partition &lambda,
                                                         const Partition &mu, int i) {
    const int k = lambda.weight();
    const int l = mu.weight();
    if (i < std::max(k, l) || i > k + l)
        return std::make_shared<const Expansion>();
    const std::string key = to_string(lambda) + to_string(mu) + std::to_string(i);
    return detail::aguiar_level_memo().get_or_compute(key, [&] {
        auto out = std::make_shared<Expansion>();
        detail::for_each_convolution_term(
            lambda, mu, i, nullptr, [&](const Partition &tau, const Partition &rho, Int w) {
                for (const auto &[nu, c4] : *lr_expand_pair_ptr(tau, rho)) {
                    Int &slot = (*out)[nu];
                    slot = checked_add(slot, checked_mul(w, c4));
                }
            });
        return std::shared_ptr<const Expansion>(std::move(out));
    });
}

/// Character of (M_λ ♯ M_μ)_i, evaluated class by class: induction from the
/// Young subgroup S_{i-l} × S_{k+l-i} × S_{i-k} of the restricted outer
/// tensor product, where the middle factor sits diagonally in both
/// S_k and S_l. Returns the zero function outside the compatible range.
inline ClassFunction heisenberg_level_character(const Partition &lambda, const Partition &mu,
                                                int i) {
    const int k = lambda.weight();
    const int l = mu.weight();
    check_degree(std::max({i, k, l}), "heisenberg_level_character");
    ClassFunction f(i);
    if (i < std::max(k, l) || i > k + l)
        return f;
    const auto [first, middle, last] = level_blocks(k, l, i);
    const auto &classes = all_partitions(i);
    for (std::size_t j = 0; j < classes.size(); ++j) {
        Wide value = 0;
        for (const CycleSplit &s : split3_sized(CycleType(classes[j]), first, middle, last)) {
            const Int left = character_value(lambda, merge_parts(s.first.shape(), s.middle.shape()));
            if (left == 0)
                continue;
            const Int right = character_value(mu, merge_parts(s.middle.shape(), s.last.shape()));
            const Wide term = checked_mul(static_cast<Wide>(left), static_cast<Wide>(right));
            value = checked_add(value, checked_mul(term, s.weight));
        }
        f.values[j] = narrow(value);
    }
    return f;
}

/// a_{λ,μ}^ν straight from the induction/restriction definition, as an
/// oracle independent of the Littlewood–Richardson and Kronecker kernels.
inline Int aguiar_induction(const AguiarQuery &q) {
    if (!q.compatible())
        return 0;
    return inner_product(heisenberg_level_character(q.lambda, q.mu, q.i()), character(q.nu));
}

inline Int aguiar_induction(const Partition &lambda, const Partition &mu, const Partition &nu) {
    return aguiar_induction(AguiarQuery{lambda, mu, nu});
}

/// M_λ ♯ M_μ, levels max(k,l) .. k+l.
inline VirtualModule heisenberg_irreducible(const Partition &lambda, const Partition &mu) {
    VirtualModule out;
    const int k = lambda.weight();
    const int l = mu.weight();
    for (int i = std::max(k, l); i <= k + l; ++i)
        for (const auto &[nu, a] : *aguiar_level_ptr(lambda, mu, i))
            out.add(nu, a);
    return out;
}

/// Bilinear extension of ♯ to direct sums.
inline VirtualModule heisenberg_product(const VirtualModule &v, const VirtualModule &w) {
    VirtualModule out;
    for (const auto &[k, vlevel] : v.levels())
        for (const auto &[lambda, m1] : vlevel)
            for (const auto &[l, wlevel] : w.levels())
                for (const auto &[mu, m2] : wlevel)
                    out.add(heisenberg_irreducible(lambda, mu), checked_mul(m1, m2));
    return out;
}

} // namespace aguiar
