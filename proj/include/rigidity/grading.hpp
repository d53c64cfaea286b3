#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rigidity/cartan.hpp"
#include "rigidity/marking.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/reps.hpp"
#include "rigidity/weight.hpp"

namespace rigidity {

struct GradingReport {
    ParabolicMarking marking;
    /// node -> Z(ω_i)
    std::map<std::size_t, Rational> z_values;
    std::int64_t k = 0;
    /// Length of the Z-grading of U: Z(λ) - Z(lowest weight).
    std::int64_t f = 0;
    /// Fewest 𝔤₋ root steps from the highest to the lowest weight.
    std::int64_t osculating_length = 0;
    std::map<std::int64_t, std::int64_t> g_dims;
    /// Empty when only the lengths were requested.
    std::map<std::int64_t, std::int64_t> u_dims;
};

/// Z(ν) = Σ_j ν^j Σ_{i∈I} (c⁻¹)_{j,i}.
[[nodiscard]] Rational z_value(const Weight& nu, const ParabolicMarking& marking, const RootSystemData& rs);

/// Z of a root given in simple-root coordinates: Σ_{i∈I} a_i.
[[nodiscard]] std::int64_t root_degree(const std::vector<int>& coeffs, const ParabolicMarking& marking);

/// max over components of Z(θ_c). Throws DomainError if a component carries no marked node.
[[nodiscard]] std::int64_t depth_k(const ParabolicMarking& marking, const RootSystemData& rs);

/// dim 𝔤_j for j in [-k, k].
[[nodiscard]] std::map<std::int64_t, std::int64_t> lie_algebra_grading(const ParabolicMarking& marking,
                                                                       const RootSystemData& rs);

/// Shortest chain λ → λ - β₁ → ... → lowest weight, β ∈ Δ⁺ with Z(β) > 0, through weights of U.
[[nodiscard]] std::int64_t osculating_length(const Weight& lambda, const ParabolicMarking& marking,
                                             const RootSystemData& rs);

/// Full report. With `module_dims` false the weight table of U is never built.
[[nodiscard]] GradingReport module_grading(const Weight& lambda, const ParabolicMarking& marking,
                                           const RootSystemData& rs, ComputeContext& ctx, bool module_dims = true);
[[nodiscard]] GradingReport module_grading(const Weight& lambda, const ParabolicMarking& marking,
                                           const RootSystemData& rs);

}  // namespace rigidity
