#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rigidity/weight.hpp"

namespace rigidity {

/// Marked nodes I of a parabolic P_I (0-based global nodes, sorted, unique).
class ParabolicMarking {
public:
    ParabolicMarking(std::vector<std::size_t> nodes, std::size_t rank);

    /// I = {i : λ^i > 0}.
    static ParabolicMarking support_of(const Weight& lambda);

    [[nodiscard]] const std::vector<std::size_t>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] std::size_t rank() const noexcept { return mask_.size(); }
    [[nodiscard]] bool contains(std::size_t i) const { return i < mask_.size() && mask_[i]; }
    /// "{1,3}" in 1-based node numbers.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const ParabolicMarking& a, const ParabolicMarking& b) { return a.nodes_ == b.nodes_; }

private:
    std::vector<std::size_t> nodes_;
    std::vector<bool> mask_;
};

}  // namespace rigidity
