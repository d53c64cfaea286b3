#pragma once

#include <cstddef>
#include <vector>

#include "rigidity/cartan.hpp"
#include "rigidity/weight.hpp"

namespace rigidity {

/// σ_{i_1} σ_{i_2} ... σ_{i_k}; acts right-to-left, so i_k is applied first.
struct ReflectionWord {
    std::vector<std::size_t> indices;

    [[nodiscard]] std::size_t length() const noexcept { return indices.size(); }
    friend bool operator==(const ReflectionWord&, const ReflectionWord&) = default;
};

/// σ_i(w) = w - w^i α_i.
[[nodiscard]] Weight reflect(std::size_t i, const Weight& w, const RootSystemData& rs);

/// w.(λ) = w(λ + ρ) - ρ.
[[nodiscard]] Weight affine_action(const ReflectionWord& word, const Weight& lambda, const RootSystemData& rs);

struct DominantResult {
    Weight dominant;
    int sign = 1;  ///< (-1)^length, or 0 when w + ρ lies on a wall
    ReflectionWord word;
};

/// Brings w to the dominant chamber under the ρ-shifted action.
/// On success `affine_action(word, dominant) == w` and sign = (-1)^length.
[[nodiscard]] DominantResult dominant_with_sign(const Weight& w, const RootSystemData& rs);

/// Dominant representative of the linear Weyl orbit of w.
[[nodiscard]] Weight dominant_representative(const Weight& w, const RootSystemData& rs);

/// Every point of the Weyl orbit of a dominant integral weight.
[[nodiscard]] std::vector<Weight> weyl_orbit(const Weight& dominant, const RootSystemData& rs);

}  // namespace rigidity
