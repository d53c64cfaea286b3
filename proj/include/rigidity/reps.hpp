#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rigidity/cartan.hpp"
#include "rigidity/marking.hpp"
#include "rigidity/weight.hpp"

namespace rigidity {

/// Weight system of one irreducible, with multiplicities.
class WeightMultiplicityTable {
public:
    WeightMultiplicityTable() = default;
    WeightMultiplicityTable(Weight highest, std::vector<std::pair<Weight, std::int64_t>> entries);

    [[nodiscard]] const Weight& highest() const noexcept { return highest_; }
    /// Sorted lexicographically by weight; multiplicities are positive.
    [[nodiscard]] const std::vector<std::pair<Weight, std::int64_t>>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::int64_t multiplicity(const Weight& w) const;
    [[nodiscard]] std::int64_t total_dimension() const noexcept { return total_; }
    [[nodiscard]] std::size_t distinct() const noexcept { return entries_.size(); }

    friend bool operator==(const WeightMultiplicityTable& a, const WeightMultiplicityTable& b) {
        return a.highest_ == b.highest_ && a.entries_ == b.entries_;
    }

private:
    Weight highest_;
    std::vector<std::pair<Weight, std::int64_t>> entries_;
    std::unordered_map<Weight, std::int64_t, WeightHash> index_;
    std::int64_t total_ = 0;
};

/// Multiset of irreducibles, keyed by highest weight.
class ModuleDecomposition {
public:
    void add(const Weight& highest, std::int64_t multiplicity);
    /// Decrements the multiplicity by one; false when the weight is absent.
    bool remove_one(const Weight& highest);

    [[nodiscard]] std::int64_t multiplicity(const Weight& highest) const;
    [[nodiscard]] const std::map<Weight, std::int64_t>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] std::int64_t total_dimension(const RootSystemData& rs) const;

    friend bool operator==(const ModuleDecomposition&, const ModuleDecomposition&) = default;

private:
    std::map<Weight, std::int64_t> entries_;
};

/// Persistent store for weight tables, keyed by a canonical text key.
class TableStore {
public:
    virtual ~TableStore() = default;
    virtual std::optional<WeightMultiplicityTable> lookup(const std::string& key, const RootSystemData& component,
                                                          const Weight& highest) = 0;
    virtual void store(const std::string& key, const WeightMultiplicityTable& table) = 0;
};

struct Limits {
    std::int64_t max_weight_entries = 1'000'000;
};

/// Carries limits, the optional table store and cache statistics through a computation.
struct ComputeContext {
    Limits limits{};
    TableStore* store = nullptr;
    std::size_t cache_hits = 0;
    std::size_t cache_misses = 0;
};

/// Cache key for one simple component: "A2|1,1".
[[nodiscard]] std::string table_key(const RootSystemData& component, const Weight& highest);

/// Weyl dimension of an irreducible; λ dominant integral.
[[nodiscard]] std::int64_t weyl_dim(const Weight& lambda, const RootSystemData& rs);

/// Dominant weights of V_λ with multiplicities, by Freudenthal's recursion.
[[nodiscard]] std::vector<std::pair<Weight, std::int64_t>> dominant_multiplicities(const Weight& lambda,
                                                                                   const RootSystemData& rs);

/// Full weight system of V_λ. Products are assembled from per-component tables.
[[nodiscard]] WeightMultiplicityTable freudenthal(const Weight& lambda, const RootSystemData& rs, ComputeContext& ctx);
[[nodiscard]] WeightMultiplicityTable freudenthal(const Weight& lambda, const RootSystemData& rs);

/// V_λ ⊗ V_μ by Klimyk's formula.
[[nodiscard]] ModuleDecomposition tensor_decompose(const Weight& lambda, const Weight& mu, const RootSystemData& rs,
                                                   ComputeContext& ctx);
[[nodiscard]] ModuleDecomposition tensor_decompose(const Weight& lambda, const Weight& mu, const RootSystemData& rs);

/// Highest weight of V_λ^*, i.e. -w_0 λ.
[[nodiscard]] Weight dual(const Weight& lambda, const RootSystemData& rs);

/// 𝔤^⊥ ⊂ 𝔰𝔩(V_λ): V_λ ⊗ V_λ^* minus one trivial and one adjoint per simple factor.
[[nodiscard]] ModuleDecomposition gperp(const Weight& lambda, const RootSystemData& rs, ComputeContext& ctx);
[[nodiscard]] ModuleDecomposition gperp(const Weight& lambda, const RootSystemData& rs);

/// Dimension of the irreducible 𝔤_0-module of highest weight w.
[[nodiscard]] std::int64_t levi_dim(const Weight& w, const ParabolicMarking& marking, const RootSystemData& rs);

/// Is μ a weight of V_λ? (dominant form of μ lies below λ in the root order)
[[nodiscard]] bool is_weight_of(const Weight& mu, const Weight& lambda, const RootSystemData& rs);

}  // namespace rigidity
