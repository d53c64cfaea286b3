#pragma once

// Brute-force H¹(𝔤₋, 𝔤^⊥) from explicit matrices.
//
// Basis of 𝔤 (ChevalleyAlgebra): h_1..h_r, then e_β for the positive roots in
// RootSystemData order, then e_{-β} in the same order.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigidity/cartan.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/marking.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/weight.hpp"

namespace rigidity {

enum class RootOrder {
    standard,  ///< height, then reverse-lexicographic (RootSystemData order)
    reversed,  ///< height, then lexicographic
};

struct OracleLimits {
    std::size_t max_algebra_dim = 500;
    std::size_t max_rep_dim = 200;
};

class ChevalleyAlgebra {
public:
    using Term = std::pair<std::size_t, std::int64_t>;

    ChevalleyAlgebra(std::shared_ptr<const RootSystemData> rs, RootOrder order);

    [[nodiscard]] const RootSystemData& roots() const noexcept { return *rs_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rs_->rank(); }
    [[nodiscard]] std::size_t num_positive() const noexcept { return rs_->positive_roots().size(); }

    [[nodiscard]] std::size_t h(std::size_t i) const { return i; }
    [[nodiscard]] std::size_t e(std::size_t root) const { return rank() + root; }
    [[nodiscard]] std::size_t f(std::size_t root) const { return rank() + num_positive() + root; }

    /// Root of a basis element in simple-root coordinates (zero for h_i).
    [[nodiscard]] const std::vector<int>& root_of(std::size_t basis) const { return basis_roots_.at(basis); }
    /// Simple-root index of e_{α_i} among the positive roots.
    [[nodiscard]] std::size_t simple_index(std::size_t i) const { return simple_.at(i); }
    /// Basis index of the root vector e_γ, if γ is a root.
    [[nodiscard]] std::optional<std::size_t> root_vector(const std::vector<int>& gamma) const;

    /// [x, y] as a sparse integer combination of basis elements.
    [[nodiscard]] const std::vector<Term>& bracket(std::size_t x, std::size_t y) const {
        return table_.at(x * dim_ + y);
    }
    /// N_{α,β} for positive roots α, β with α + β a root.
    [[nodiscard]] std::int64_t structure_constant(std::size_t a, std::size_t b) const;

    /// Exact Jacobi check on all triples; returns the number of triples checked.
    std::size_t verify_jacobi() const;

private:
    std::shared_ptr<const RootSystemData> rs_;
    std::size_t dim_ = 0;
    std::vector<std::vector<int>> basis_roots_;
    std::vector<std::size_t> simple_;
    std::vector<std::vector<Term>> table_;
};

[[nodiscard]] std::shared_ptr<const ChevalleyAlgebra> build_chevalley(const DynkinDiagram& diagram,
                                                                      RootOrder order = RootOrder::standard,
                                                                      const OracleLimits& limits = {});

/// Representation names the oracle understands, one factor per simple component:
///   factor  = base | "sym^" d "(" base ")" | "ext^" k "(" base ")"
///   base    = "defining" | "adjoint"
///   spec    = factor (("*" | "⊠") factor)*
struct RepFactor {
    enum class Base { defining, adjoint } base = Base::defining;
    enum class Functor { none, sym, ext } functor = Functor::none;
    int degree = 1;

    [[nodiscard]] std::string str() const;
};

struct RepSpec {
    std::vector<RepFactor> factors;

    static RepSpec parse(std::string_view text);
    [[nodiscard]] std::string str() const;
};

class MatrixRep {
public:
    [[nodiscard]] const RepSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] std::size_t dim() const noexcept { return weights_.size(); }
    [[nodiscard]] const QMatrix& matrix(std::size_t basis) const { return mats_.at(basis); }
    [[nodiscard]] const std::vector<Weight>& basis_weights() const noexcept { return weights_; }
    [[nodiscard]] const Weight& highest_weight() const noexcept { return highest_; }
    [[nodiscard]] const ChevalleyAlgebra& algebra() const noexcept { return *alg_; }

private:
    friend MatrixRep build_rep(const RepSpec&, std::shared_ptr<const ChevalleyAlgebra>, const OracleLimits&);

    RepSpec spec_;
    std::shared_ptr<const ChevalleyAlgebra> alg_;
    std::vector<QMatrix> mats_;
    std::vector<Weight> weights_;
    Weight highest_;
};

/// Builds and checks (homomorphism, diagonal Cartan, irreducibility) a representation.
[[nodiscard]] MatrixRep build_rep(const RepSpec& spec, std::shared_ptr<const ChevalleyAlgebra> alg,
                                  const OracleLimits& limits = {});

/// A rep spec whose module has the given highest weight, when one exists among the supported builds.
[[nodiscard]] std::optional<RepSpec> rep_spec_for_weight(const Weight& lambda, const RootSystemData& rs);

/// Homogeneous element of Γ = 𝔤^⊥: a (dim U)² coordinate vector with its gl(U)-weight.
struct GammaVector {
    Weight weight;
    Rational degree;
    std::vector<std::pair<std::size_t, mpq_class>> entries;  ///< (a * dim U + b, coefficient of E_ab)
};

struct GammaBasis {
    std::size_t module_dim = 0;
    std::vector<GammaVector> vectors;
};

/// Exact basis of {X ∈ 𝔰𝔩(U) : tr(X ρ(y)) = 0 for all y ∈ 𝔤}, split by weight.
[[nodiscard]] GammaBasis gperp_matrices(const MatrixRep& rep, const ParabolicMarking& marking);

/// [ρ(y), X] ∈ span Γ for every basis y and basis vector X.
[[nodiscard]] bool gamma_is_stable(const MatrixRep& rep, const GammaBasis& gamma);

struct DegreeDims {
    Rational degree;
    std::int64_t c0 = 0, c1 = 0, c2 = 0;
    std::int64_t rank0 = 0, rank1 = 0;
    std::int64_t h1 = 0;
};

struct GradedComplexDims {
    ParabolicMarking marking;
    std::int64_t d_max = 0;
    std::int64_t gamma_dim = 0;
    std::vector<DegreeDims> degrees;  ///< ascending, only degrees with C¹_d ≠ 0 and d <= d_max
    std::size_t blocks_checked = 0;   ///< weight blocks where ∂¹∘∂⁰ = 0 was verified
};

/// dim H¹_d(𝔤₋, Γ) for d <= d_max by exact ranks of ∂⁰ and ∂¹.
[[nodiscard]] GradedComplexDims h1_dims(const MatrixRep& rep, const ParabolicMarking& marking, std::int64_t d_max);

}  // namespace rigidity
