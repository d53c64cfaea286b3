#pragma once

#include <memory>
#include <random>
#include <string>

#include "rigidity/cartan.hpp"
#include "rigidity/weight.hpp"

namespace test {

inline std::shared_ptr<const rigidity::RootSystemData> sys(const std::string& literal) {
    return rigidity::build_root_system(rigidity::DynkinDiagram::parse(literal));
}

// Fixed seed: property tests must be reproducible.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20261014);
    return g;
}

inline rigidity::Weight random_dominant(std::size_t rank, int max_coord) {
    std::uniform_int_distribution<int> d(0, max_coord);
    rigidity::Weight w(rank);
    for (std::size_t i = 0; i < rank; ++i) w[i] = rigidity::Rational(d(rng()));
    return w;
}

}  // namespace test
