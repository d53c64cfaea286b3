#include "rigidity/marking.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"

namespace rigidity {

ParabolicMarking::ParabolicMarking(std::vector<std::size_t> nodes, std::size_t rank) : mask_(rank, false) {
    if (nodes.empty()) throw DomainError("marking must contain at least one node");
    for (auto i : nodes) {
        if (i >= rank) {
            throw DomainError("marked node " + std::to_string(i + 1) + " out of range 1.." + std::to_string(rank));
        }
        mask_[i] = true;
    }
    for (std::size_t i = 0; i < rank; ++i)
        if (mask_[i]) nodes_.push_back(i);
}

ParabolicMarking ParabolicMarking::support_of(const Weight& lambda) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i].sign() > 0) nodes.push_back(i);
    if (nodes.empty()) throw DomainError("weight " + lambda.str() + " has empty support");
    return ParabolicMarking(std::move(nodes), lambda.size());
}

std::string ParabolicMarking::str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(nodes_[k] + 1);
    }
    return s + "}";
}

}  // namespace rigidity
