#pragma once

// Root-system data for finite products of simple Lie types, Bourbaki numbering.
//
// Node layouts (1-based local numbering, as printed in Bourbaki's plates):
//
//   A_n   1 - 2 - ... - n
//   B_n   1 - 2 - ... - (n-1) => n        (α_n short)
//   C_n   1 - 2 - ... - (n-1) <= n        (α_n long)
//   D_n   1 - 2 - ... - (n-2) - (n-1)
//                         |
//                         n
//   E_n   1 - 3 - 4 - 5 - ... - n
//               |
//               2
//   F_4   1 - 2 => 3 - 4                  (α_1, α_2 long)
//   G_2   1 <= 2                          (α_1 short, α_2 long)
//
// The Cartan matrix is C_ij = <α_i, α_j^∨>, so row i is α_i written in the
// fundamental-weight basis. Global nodes are numbered 0..rank-1 in C++ and
// 1..rank in every external surface (CLI, JSON).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/rational.hpp"
#include "rigidity/weight.hpp"

namespace rigidity {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleComponent {
    Family family;
    int rank;

    [[nodiscard]] std::string literal() const;
    friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

class DynkinDiagram {
public:
    /// Validates every component; throws DomainError naming the offender.
    explicit DynkinDiagram(std::vector<SimpleComponent> components);

    /// Grammar: component ('x' component)*, component = [A-G][0-9]+.
    static DynkinDiagram parse(std::string_view literal);

    [[nodiscard]] const std::vector<SimpleComponent>& components() const noexcept { return components_; }
    [[nodiscard]] std::size_t num_components() const noexcept { return components_.size(); }
    [[nodiscard]] std::size_t total_rank() const noexcept { return total_rank_; }
    [[nodiscard]] std::string literal() const;

    /// First global node of a component.
    [[nodiscard]] std::size_t offset(std::size_t component) const { return offsets_.at(component); }
    [[nodiscard]] std::size_t component_of(std::size_t node) const;
    [[nodiscard]] std::size_t local_index(std::size_t node) const { return node - offset(component_of(node)); }

    friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) { return a.components_ == b.components_; }

private:
    std::vector<SimpleComponent> components_;
    std::vector<std::size_t> offsets_;
    std::size_t total_rank_ = 0;
};

/// A positive root in simple-root coordinates.
struct Root {
    std::vector<int> coeffs;
    std::vector<int> coroot;  ///< α^∨ in the simple-coroot basis
    std::size_t component = 0;
    int height = 0;
};

/// Immutable root-system constants. Thread-safe to share once built.
class RootSystemData {
public:
    explicit RootSystemData(DynkinDiagram diagram);

    [[nodiscard]] const DynkinDiagram& diagram() const noexcept { return diagram_; }
    [[nodiscard]] std::size_t rank() const noexcept { return diagram_.total_rank(); }

    [[nodiscard]] int cartan(std::size_t i, std::size_t j) const { return cartan_.at(i * rank() + j); }
    [[nodiscard]] const Rational& inverse_cartan(std::size_t i, std::size_t j) const {
        return inverse_.at(i * rank() + j);
    }
    [[nodiscard]] std::vector<Rational> inverse_cartan_diagonal() const;

    /// Positive roots ordered by height, then reverse-lexicographically on
    /// coefficient vectors, which lists simple roots in node order.
    [[nodiscard]] const std::vector<Root>& positive_roots() const noexcept { return positive_; }
    [[nodiscard]] std::optional<std::size_t> positive_root_index(const std::vector<int>& coeffs) const;
    [[nodiscard]] const Root& highest_root(std::size_t component) const { return positive_.at(highest_.at(component)); }
    [[nodiscard]] std::size_t dimension() const noexcept { return rank() + 2 * positive_.size(); }

    /// (α_i, α_i)/2, normalized per component so short roots give 1.
    [[nodiscard]] const Rational& half_norm(std::size_t i) const { return half_norm_.at(i); }

    [[nodiscard]] Weight rho() const;
    [[nodiscard]] Weight zero_weight() const { return Weight(rank()); }
    [[nodiscard]] Weight fundamental(std::size_t i) const;

    /// Root (simple-root coordinates) -> weight (fundamental-weight coordinates).
    [[nodiscard]] Weight root_to_weight(const std::vector<int>& coeffs) const;
    [[nodiscard]] Weight root_to_weight(const std::vector<Rational>& coeffs) const;
    [[nodiscard]] Weight simple_root(std::size_t i) const;
    /// Weight -> simple-root coordinates via c^{-1}.
    [[nodiscard]] std::vector<Rational> weight_in_root_coords(const Weight& w) const;

    /// <w, α^∨> for a positive root.
    [[nodiscard]] Rational coroot_pairing(const Weight& w, const Root& alpha) const;
    /// Invariant form (·,·) on weights, short roots of each component of norm 2.
    [[nodiscard]] Rational inner(const Weight& a, const Weight& b) const;

    /// Single-component subsystem; the system itself when simple.
    [[nodiscard]] const RootSystemData& component_system(std::size_t c) const;
    [[nodiscard]] std::vector<Weight> split(const Weight& w) const;
    [[nodiscard]] Weight join(const std::vector<Weight>& parts) const;
    /// Highest root of component c as a weight of the whole system.
    [[nodiscard]] Weight adjoint_weight(std::size_t component) const;

    void check_weight(const Weight& w) const;

private:
    DynkinDiagram diagram_;
    std::vector<int> cartan_;
    std::vector<Rational> inverse_;
    std::vector<Rational> half_norm_;
    std::vector<Root> positive_;
    std::vector<std::size_t> highest_;
    std::vector<std::shared_ptr<const RootSystemData>> components_;
};

[[nodiscard]] std::shared_ptr<const RootSystemData> build_root_system(const DynkinDiagram& diagram);

/// Closed-form |Δ⁺| for a simple component.
[[nodiscard]] std::size_t expected_positive_root_count(const SimpleComponent& c);

}  // namespace rigidity
