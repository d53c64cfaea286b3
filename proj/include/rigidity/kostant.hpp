#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/cartan.hpp"
#include "rigidity/marking.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/reps.hpp"
#include "rigidity/weight.hpp"

namespace rigidity {

/// One constituent of H¹(𝔤₋, Γ): the 𝔤₀-module of highest weight σ_i.λ_ν.
struct H1Component {
    Weight source_weight;
    std::int64_t source_multiplicity = 1;
    std::size_t node = 0;
    Weight reflected_weight;
    Rational degree;  ///< d = -Z(σ_i.λ_ν)
    std::int64_t g0_dimension = 1;

    /// multiplicity · dim of the 𝔤₀-module.
    [[nodiscard]] std::int64_t total_dimension() const { return source_multiplicity * g0_dimension; }
};

struct RigidityVerdict {
    std::int64_t p = -1;
    std::string system_name;
    bool rigid = true;
    std::vector<H1Component> obstructions;  ///< degree >= p + 2
    std::vector<H1Component> informational;  ///< everything else, same ordering
    std::int64_t total_obstruction_dimension = 0;
    /// Set only for adjoint weights.
    std::optional<std::string> note;
};

enum class QuickVanishing { vanishes_for_d_ge_1, vanishes_for_d_gt_1, inconclusive };

[[nodiscard]] const char* to_string(QuickVanishing q);

/// Z(σ_{i₀}.λ) = Z(λ) - λ^{i₀} - 1. Throws DomainError if i₀ is not marked.
[[nodiscard]] Rational z_of_reflected(const Weight& lambda, std::size_t i0, const ParabolicMarking& marking,
                                      const RootSystemData& rs);

/// One component per (constituent, marked node), sorted by degree descending.
[[nodiscard]] std::vector<H1Component> h1(const ModuleDecomposition& gamma, const ParabolicMarking& marking,
                                          const RootSystemData& rs);

/// Sum of total_dimension per degree.
[[nodiscard]] std::map<Rational, std::int64_t> h1_dims_by_degree(const std::vector<H1Component>& comps);

/// Decision for the (I_p^f, Ω) system: rigid iff no H¹_d with d >= p + 2.
[[nodiscard]] RigidityVerdict certify(const Weight& lambda, std::int64_t p, const RootSystemData& rs,
                                      ComputeContext& ctx);
[[nodiscard]] RigidityVerdict certify(const Weight& lambda, std::int64_t p, const RootSystemData& rs);

/// Same verdict from an already computed H¹ list.
[[nodiscard]] RigidityVerdict verdict_from(const std::vector<H1Component>& comps, std::int64_t p, const Weight& lambda,
                                           const RootSystemData& rs);

/// Sufficient condition read off (c⁻¹)_{i,i} for i in support(λ); no decomposition needed.
[[nodiscard]] QuickVanishing quick_vanishing_test(const Weight& lambda, const RootSystemData& rs);

/// λ is the highest root of one component and zero elsewhere.
[[nodiscard]] bool is_adjoint_weight(const Weight& lambda, const RootSystemData& rs);

}  // namespace rigidity
