#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aguiar/characters.hpp"
#include "aguiar/error.hpp"
#include "aguiar/heisenberg.hpp"
#include "aguiar/partition.hpp"

namespace aguiar {

/// Direction (α, β; γ) of a shifted sequence a_{λ+dα, μ+dβ}^{ν+dγ}.
struct Triple {
    Partition alpha;
    Partition beta;
    Partition gamma;
    friend bool operator==(const Triple &, const Triple &) = default;
};

inline std::string to_string(const Triple &t) {
    return "(" + to_string(t.alpha) + "," + to_string(t.beta) + ";" + to_string(t.gamma) + ")";
}

inline const Triple murnaghan_triple{{1}, {1}, {1}};
inline const Triple triple_2_1_2{{2}, {1}, {2}};
inline const Triple triple_2_1_3{{2}, {1}, {3}};

/// Dimensions (n1, n2) of the two ambient vector spaces the geometric bounds
/// are evaluated in.
struct BoundContext {
    int n1 = 2;
    int n2 = 2;
    friend bool operator==(const BoundContext &, const BoundContext &) = default;
};

inline std::string to_string(const BoundContext &ctx) {
    return std::to_string(ctx.n1) + "," + std::to_string(ctx.n2);
}

inline bool admissible(const BoundContext &ctx, const Partition &lambda, const Partition &mu,
                       const Partition &nu, const Triple &t) {
    return ctx.n1 >= std::max({lambda.length(), t.alpha.length(), 2}) &&
           ctx.n2 >= std::max({mu.length(), t.beta.length(), 2}) &&
           ctx.n1 * ctx.n2 + ctx.n1 + ctx.n2 >= std::max(nu.length(), t.gamma.length());
}

/// Smallest admissible context: each dimension starts at its length floor,
/// then the smaller one (n1 on ties) grows until the combined dimension
/// n1·n2 + n1 + n2 holds ν and γ.
inline BoundContext minimal_context(const Partition &lambda, const Partition &mu,
                                    const Partition &nu, const Triple &t) {
    BoundContext ctx{std::max({lambda.length(), t.alpha.length(), 2}),
                     std::max({mu.length(), t.beta.length(), 2})};
    while (!admissible(ctx, lambda, mu, nu, t)) {
        if (ctx.n1 <= ctx.n2)
            ++ctx.n1;
        else
            ++ctx.n2;
    }
    return ctx;
}

namespace detail {
inline void require_admissible(const BoundContext &ctx, const Partition &lambda,
                               const Partition &mu, const Partition &nu, const Triple &t,
                               const char *what) {
    if (!admissible(ctx, lambda, mu, nu, t))
        throw DomainError(std::string(what) + ": context (" + to_string(ctx) +
                          ") is not admissible for " + to_string(lambda) + "," +
                          to_string(mu) + "," + to_string(nu));
}

// ⌈x/2⌉ for any sign.
inline long ceil_half(long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }
} // namespace detail

/// Coefficient-level bound for the ((1),(1);(1)) direction:
/// ⌈(3|ν| − |λ| − |μ| − λ1 − μ1 − ν1 + λ2 + μ2 + ν2 − 1)/2⌉, clamped at 0.
inline long ying_coefficient_bound(const Partition &lambda, const Partition &mu,
                                   const Partition &nu) {
    const long e = 3L * nu.weight() - lambda.weight() - mu.weight() - lambda.part(1) -
                   mu.part(1) - nu.part(1) + lambda.part(2) + mu.part(2) + nu.part(2) - 1;
    return std::max(0L, detail::ceil_half(e));
}

/// Onset for the whole module (M_{λ+(d)} ♯ M_{μ+(d)})_{i+d}:
/// 3i − |λ| − |μ| − λ1 − μ1 + λ2 + μ2, clamped at 0.
inline long ying_module_bound(const Partition &lambda, const Partition &mu, int i) {
    const long e = 3L * i - lambda.weight() - mu.weight() - lambda.part(1) - mu.part(1) +
                   lambda.part(2) + mu.part(2);
    return std::max(0L, e);
}

/// Bound for a_{λ+(d), μ+(d)}^{ν+(d)}:
/// −λ1 − μ1 + ν1 + 2ν2 + Σ_{j=3}^{n1+n2+1} νj.
inline long murnaghan_bound(const Partition &lambda, const Partition &mu, const Partition &nu,
                            const BoundContext &ctx) {
    detail::require_admissible(ctx, lambda, mu, nu, murnaghan_triple, "murnaghan_bound");
    const long e = -lambda.part(1) - mu.part(1) + nu.part(1) + 2L * nu.part(2) +
                   nu.part_sum(3, ctx.n1 + ctx.n2 + 1);
    return std::max(0L, e);
}

/// The raw expression M of the refined Murnaghan-case estimate (one-parameter
/// subgroup of weight 2), before halving.
inline long murnaghan_improved_raw(const Partition &lambda, const Partition &mu,
                                   const Partition &nu, const BoundContext &ctx) {
    const int n1 = ctx.n1;
    const int n2 = ctx.n2;
    return -2L * lambda.part(1) - lambda.part_sum(3, n1) - 2L * mu.part(1) - mu.part_sum(3, n2) +
           2L * nu.part(1) + 4L * nu.part(2) + 3L * nu.part_sum(3, n1 + n2 - 2) +
           2L * nu.part_sum(n1 + n2 - 1, n1 * n2 - n1 - n2 + 5) +
           nu.part_sum(n1 * n2 - n1 - n2 + 6, n1 * n2 + n1 + n2 - 3);
}

/// ⌈M/2⌉ clamped at 0.
inline long murnaghan_bound_improved(const Partition &lambda, const Partition &mu,
                                     const Partition &nu, const BoundContext &ctx) {
    detail::require_admissible(ctx, lambda, mu, nu, murnaghan_triple,
                               "murnaghan_bound_improved");
    return std::max(0L, detail::ceil_half(murnaghan_improved_raw(lambda, mu, nu, ctx)));
}

namespace detail {
// Shared by both ((2),(1);·) bounds: the term coming from the second
// destabilised orbit.
inline long orbit2_term(const Partition &lambda, const Partition &mu, const Partition &nu,
                        const BoundContext &ctx) {
    const int n1 = ctx.n1;
    const int n2 = ctx.n2;
    return -static_cast<long>(lambda.part(1)) + mu.part(1) + nu.part_sum(2, n2 + 1) -
           nu.part_sum(n1 * n2 + n2 + 1, n1 * n2 + n1 + n2);
}
} // namespace detail

/// Bound for a_{λ+(2d), μ+(d)}^{ν+(2d)}.
inline long t22_bound(const Partition &lambda, const Partition &mu, const Partition &nu,
                      const BoundContext &ctx) {
    detail::require_admissible(ctx, lambda, mu, nu, triple_2_1_2, "t22_bound");
    const long orbit1 = -static_cast<long>(lambda.part(1)) - mu.part(1) + nu.part(1) +
                        2L * nu.part(2) + nu.part_sum(3, ctx.n1 + ctx.n2 + 1);
    return std::max({0L, orbit1, detail::orbit2_term(lambda, mu, nu, ctx)});
}

/// The third-orbit expression of the ((2),(1);(3)) bound, term by term.
inline long t23_orbit3_term(const Partition &lambda, const Partition &mu, const Partition &nu,
                            const BoundContext &ctx) {
    const int n1 = ctx.n1;
    const int n2 = ctx.n2;
    const int n12 = n1 * n2;
    return 3L * lambda.part(1) + 2L * lambda.part_sum(2, n1) - mu.part(1) + 2L * mu.part(2) -
           2L * nu.part(1) + nu.part(2) - nu.part_sum(n2 + 1, n2 + n1 - 1) -
           2L * nu.part_sum(n1 + n2, n12 + 1) - 3L * nu.part_sum(n12 + 2, n12 + n2) -
           4L * nu.part_sum(n12 + n2 + 1, n12 + n2 + n1 - 1) - 5L * nu.part(n12);
}

/// Bound for a_{λ+(2d), μ+(d)}^{ν+(3d)}.
inline long t23_bound(const Partition &lambda, const Partition &mu, const Partition &nu,
                      const BoundContext &ctx) {
    detail::require_admissible(ctx, lambda, mu, nu, triple_2_1_3, "t23_bound");
    return std::max({0L, detail::orbit2_term(lambda, mu, nu, ctx),
                     t23_orbit3_term(lambda, mu, nu, ctx)});
}

/// Names accepted by parse_bound_kind and reported in StabilityReport.
enum class BoundKind { ying, murnaghan, murnaghan_improved, t22, t23 };

inline const char *bound_name(BoundKind k) {
    switch (k) {
    case BoundKind::ying: return "ying";
    case BoundKind::murnaghan: return "murnaghan";
    case BoundKind::murnaghan_improved: return "murnaghan-improved";
    case BoundKind::t22: return "t22";
    case BoundKind::t23: return "t23";
    }
    return "?";
}

inline std::optional<BoundKind> parse_bound_kind(std::string_view name) {
    for (BoundKind k : {BoundKind::ying, BoundKind::murnaghan, BoundKind::murnaghan_improved,
                        BoundKind::t22, BoundKind::t23})
        if (name == bound_name(k))
            return k;
    return std::nullopt;
}

/// The direction each bound family applies to.
inline const Triple &bound_triple(BoundKind k) {
    switch (k) {
    case BoundKind::t22: return triple_2_1_2;
    case BoundKind::t23: return triple_2_1_3;
    default: return murnaghan_triple;
    }
}

/// Evaluates a bound; ctx == nullopt selects the minimal admissible context.
/// The context is ignored by the ying bound.
inline long evaluate_bound(BoundKind kind, const Partition &lambda, const Partition &mu,
                           const Partition &nu, std::optional<BoundContext> ctx = std::nullopt) {
    const BoundContext c = ctx ? *ctx : minimal_context(lambda, mu, nu, bound_triple(kind));
    switch (kind) {
    case BoundKind::ying: return ying_coefficient_bound(lambda, mu, nu);
    case BoundKind::murnaghan: return murnaghan_bound(lambda, mu, nu, c);
    case BoundKind::murnaghan_improved: return murnaghan_bound_improved(lambda, mu, nu, c);
    case BoundKind::t22: return t22_bound(lambda, mu, nu, c);
    case BoundKind::t23: return t23_bound(lambda, mu, nu, c);
    }
    return 0;
}

/// Bound families whose direction matches t.
inline std::vector<BoundKind> applicable_bounds(const Triple &t) {
    if (t == murnaghan_triple)
        return {BoundKind::ying, BoundKind::murnaghan, BoundKind::murnaghan_improved};
    if (t == triple_2_1_2)
        return {BoundKind::t22};
    if (t == triple_2_1_3)
        return {BoundKind::t23};
    return {};
}

struct HypothesisCheck {
    bool holds = true;
    /// First d with a_{dα,dβ}^{dγ} != 1, and that value.
    std::optional<int> failing_d;
    Int failing_value = 0;
    std::vector<Int> values; // index d-1
};

/// Tests a_{dα,dβ}^{dγ} = 1 for d = 1..dmax. A positive answer is evidence
/// for stability, not a proof; the check stops at the first failure.
inline HypothesisCheck check_stable_hypothesis(const Triple &t, int dmax) {
    if (dmax < 1)
        throw DomainError("check_stable_hypothesis: dmax must be positive");
    HypothesisCheck out;
    const Partition zero;
    for (int d = 1; d <= dmax; ++d) {
        const Int v = aguiar_formula(add_scaled(zero, t.alpha, d), add_scaled(zero, t.beta, d),
                                     add_scaled(zero, t.gamma, d));
        out.values.push_back(v);
        if (v != 1) {
            out.holds = false;
            out.failing_d = d;
            out.failing_value = v;
            break;
        }
    }
    return out;
}

struct StabilityReport {
    Triple triple;
    Partition lambda, mu, nu;
    int dmax = 0;
    std::vector<Int> values; // index d
    /// First index of the constant tail observed in the window.
    int empirical_onset = 0;
    /// Set when the observed constant tail is shorter than three values.
    bool inconclusive = false;
    std::map<std::string, long> bound_predictions;
};

/// Index at which the trailing constant run of values begins.
inline int constant_tail_start(const std::vector<Int> &values) {
    int onset = 0;
    for (std::size_t d = 1; d < values.size(); ++d)
        if (values[d] != values[d - 1])
            onset = static_cast<int>(d);
    return onset;
}

/// Evaluates a_{λ+dα, μ+dβ}^{ν+dγ} for d = 0..dmax with the convolution
/// formula. Every shifted partition must stay within the degree limit.
inline StabilityReport scan_sequence(const Partition &lambda, const Partition &mu,
                                     const Partition &nu, const Triple &t, int dmax) {
    if (dmax < 0)
        throw DomainError("scan_sequence: negative dmax");
    const int heaviest = std::max({add_scaled(lambda, t.alpha, dmax).weight(),
                                   add_scaled(mu, t.beta, dmax).weight(),
                                   add_scaled(nu, t.gamma, dmax).weight()});
    if (heaviest > degree_limit())
        throw LimitExceeded("scan_sequence: shifted partitions reach weight " +
                            std::to_string(heaviest) + ", above the degree limit " +
                            std::to_string(degree_limit()));
    StabilityReport r{t, lambda, mu, nu, dmax, {}, 0, false, {}};
    for (int d = 0; d <= dmax; ++d)
        r.values.push_back(aguiar_formula(add_scaled(lambda, t.alpha, d),
                                          add_scaled(mu, t.beta, d),
                                          add_scaled(nu, t.gamma, d)));
    r.empirical_onset = constant_tail_start(r.values);
    r.inconclusive = dmax - r.empirical_onset < 2;
    for (BoundKind k : applicable_bounds(t))
        r.bound_predictions[bound_name(k)] = evaluate_bound(k, lambda, mu, nu);
    return r;
}

/// Index from which the level-(i+d) component of M_{λ+(d)} ♯ M_{μ+(d)}
/// stays the same (with first rows shifted), observed for d = 0..dmax.
inline int module_tail_start(const Partition &lambda, const Partition &mu, int i, int dmax) {
    const Partition one{1};
    auto shifted_level = [&](int d) {
        // Strip d from the first row so that successive levels compare.
        std::map<std::vector<int>, Int> out;
        const auto level = aguiar_level_ptr(add_scaled(lambda, one, d), add_scaled(mu, one, d), i + d);
        for (const auto &[nu, a] : *level) {
            std::vector<int> parts(nu.parts().begin(), nu.parts().end());
            if (parts.empty())
                parts.push_back(0);
            parts[0] -= d;
            out.emplace(std::move(parts), a);
        }
        return out;
    };
    int onset = 0;
    auto prev = shifted_level(0);
    for (int d = 1; d <= dmax; ++d) {
        auto cur = shifted_level(d);
        if (cur != prev)
            onset = d;
        prev = std::move(cur);
    }
    return onset;
}

} // namespace aguiar
