#pragma once

#include <memory>
#include <string>

#include "aguiar/characters.hpp"
#include "aguiar/checked.hpp"
#include "aguiar/lr.hpp"
#include "aguiar/memo.hpp"
#include "aguiar/partition.hpp"

namespace aguiar {

namespace detail {
inline Memo<std::shared_ptr<const Expansion>> &kronecker_expansion_memo() {
    static Memo<std::shared_ptr<const Expansion>> memo;
    return memo;
}
} // namespace detail

/// g_{λ,μ,ν} = (1/n!) Σ_ρ |class ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ); zero unless all
/// three weights agree.
inline Int kronecker_coefficient(const Partition &lambda, const Partition &mu,
                                 const Partition &nu) {
    const int n = lambda.weight();
    if (mu.weight() != n || nu.weight() != n)
        return 0;
    const auto table = character_table_ptr(n);
    const auto &a = table->row(lambda).values;
    const auto &b = table->row(mu).values;
    const auto &c = table->row(nu).values;
    const auto &classes = all_partitions(n);
    Wide sum = 0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        if (a[j] == 0 || b[j] == 0 || c[j] == 0)
            continue;
        Wide term = checked_mul(static_cast<Wide>(a[j]), static_cast<Wide>(b[j]));
        term = checked_mul(term, static_cast<Wide>(c[j]));
        sum = checked_add(sum, checked_mul(term, CycleType(classes[j]).class_size()));
    }
    return narrow(exact_div(sum, factorial(n), "kronecker_coefficient"));
}

/// Decomposition of M_λ ⊗ M_μ; verifies Σ g·dim ν = dim λ · dim μ.
inline std::shared_ptr<const Expansion> kronecker_expand_pair_ptr(const Partition &lambda,
                                                                  const Partition &mu) {
    if (lambda.weight() != mu.weight())
        throw DomainError("kronecker_expand_pair: weights of " + to_string(lambda) + " and " +
                          to_string(mu) + " differ");
    const std::string key = to_string(lambda) + to_string(mu);
    return detail::kronecker_expansion_memo().get_or_compute(key, [&] {
        const int n = lambda.weight();
        const auto table = character_table_ptr(n);
        auto out = std::make_shared<Expansion>();
        Wide dims = 0;
        for (const Partition &nu : all_partitions(n)) {
            if (Int g = kronecker_coefficient(lambda, mu, nu); g > 0) {
                out->emplace(nu, g);
                dims = checked_add(dims, checked_mul(static_cast<Wide>(g),
                                                     static_cast<Wide>(table->dimension(nu))));
            }
        }
        const Wide expected = checked_mul(static_cast<Wide>(table->dimension(lambda)),
                                          static_cast<Wide>(table->dimension(mu)));
        if (dims != expected)
            throw ArithmeticError("kronecker_expand_pair: dimension check failed for " +
                                  to_string(lambda) + " x " + to_string(mu));
        return std::shared_ptr<const Expansion>(std::move(out));
    });
}

inline Expansion kronecker_expand_pair(const Partition &lambda, const Partition &mu) {
    return *kronecker_expand_pair_ptr(lambda, mu);
}

} // namespace aguiar
