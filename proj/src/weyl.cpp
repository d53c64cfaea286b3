#include "rigidity/weyl.hpp"

#include <algorithm>
#include <unordered_set>

#include "rigidity/errors.hpp"

namespace rigidity {

Weight reflect(std::size_t i, const Weight& w, const RootSystemData& rs) {
    rs.check_weight(w);
    if (i >= rs.rank()) throw DomainError("reflection node " + std::to_string(i + 1) + " out of range");
    const Rational c = w[i];
    if (c.is_zero()) return w;
    Weight out = w;
    for (std::size_t j = 0; j < rs.rank(); ++j) {
        const int a = rs.cartan(i, j);
        if (a != 0) out[j] -= c * Rational(a);
    }
    return out;
}

Weight affine_action(const ReflectionWord& word, const Weight& lambda, const RootSystemData& rs) {
    Weight v = lambda + rs.rho();
    for (auto it = word.indices.rbegin(); it != word.indices.rend(); ++it) v = reflect(*it, v, rs);
    return v - rs.rho();
}

DominantResult dominant_with_sign(const Weight& w, const RootSystemData& rs) {
    if (!w.is_integral()) throw DomainError("dominant_with_sign needs an integral weight, got " + w.str());
    Weight v = w + rs.rho();
    std::vector<std::size_t> applied;
    while (true) {
        std::size_t i = 0;
        while (i < v.size() && v[i].sign() >= 0) ++i;
        if (i == v.size()) break;
        v = reflect(i, v, rs);
        applied.push_back(i);
    }
    DominantResult r;
    r.dominant = v - rs.rho();
    // The product σ_{j_k}...σ_{j_1} sends w+ρ to v; its inverse word sends v back.
    r.word.indices = applied;
    const bool singular = std::any_of(v.coords().begin(), v.coords().end(), [](const Rational& q) { return q.is_zero(); });
    r.sign = singular ? 0 : (applied.size() % 2 == 0 ? 1 : -1);
    return r;
}

Weight dominant_representative(const Weight& w, const RootSystemData& rs) {
    Weight v = w;
    while (true) {
        std::size_t i = 0;
        while (i < v.size() && v[i].sign() >= 0) ++i;
        if (i == v.size()) return v;
        v = reflect(i, v, rs);
    }
}

std::vector<Weight> weyl_orbit(const Weight& dominant, const RootSystemData& rs) {
    if (!dominant.is_dominant()) throw DomainError("weyl_orbit needs a dominant weight, got " + dominant.str());
    std::unordered_set<Weight, WeightHash> seen{dominant};
    std::vector<Weight> out{dominant};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (out[head][i].sign() <= 0) continue;
            Weight next = reflect(i, out[head], rs);
            if (seen.insert(next).second) out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace rigidity
