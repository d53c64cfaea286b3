#include "rigidity/grading.hpp"

#include <unordered_map>
#include <unordered_set>

#include "detail/int_system.hpp"
#include "rigidity/errors.hpp"

namespace rigidity {

Rational z_value(const Weight& nu, const ParabolicMarking& marking, const RootSystemData& rs) {
    rs.check_weight(nu);
    if (marking.rank() != rs.rank()) throw DomainError("marking rank does not match the diagram");
    Rational z(0);
    for (std::size_t j = 0; j < rs.rank(); ++j) {
        if (nu[j].is_zero()) continue;
        for (auto i : marking.nodes()) z += nu[j] * rs.inverse_cartan(j, i);
    }
    return z;
}

std::int64_t root_degree(const std::vector<int>& coeffs, const ParabolicMarking& marking) {
    std::int64_t d = 0;
    for (auto i : marking.nodes()) d += coeffs.at(i);
    return d;
}

std::int64_t depth_k(const ParabolicMarking& marking, const RootSystemData& rs) {
    if (marking.rank() != rs.rank()) throw DomainError("marking rank does not match the diagram");
    const auto& dg = rs.diagram();
    std::int64_t k = 0;
    for (std::size_t c = 0; c < dg.num_components(); ++c) {
        const auto lo = dg.offset(c);
        const auto hi = lo + static_cast<std::size_t>(dg.components()[c].rank);
        bool marked = false;
        for (auto i = lo; i < hi; ++i) marked = marked || marking.contains(i);
        if (!marked) {
            throw DomainError("marking " + marking.str() + " has no node on component " +
                              dg.components()[c].literal() + "; the grading depth is undefined there");
        }
        k = std::max(k, root_degree(rs.highest_root(c).coeffs, marking));
    }
    return k;
}

std::map<std::int64_t, std::int64_t> lie_algebra_grading(const ParabolicMarking& marking, const RootSystemData& rs) {
    std::map<std::int64_t, std::int64_t> dims;
    dims[0] = static_cast<std::int64_t>(rs.rank());
    for (const auto& a : rs.positive_roots()) {
        const auto d = root_degree(a.coeffs, marking);
        dims[d] += 1;
        dims[-d] += 1;
    }
    return dims;
}

std::int64_t osculating_length(const Weight& lambda, const ParabolicMarking& marking, const RootSystemData& rs) {
    using detail::IVec;
    const detail::IntSystem sys(rs);
    std::unordered_set<IVec, detail::IVecHash> dominant;
    for (const auto& [w, m] : dominant_multiplicities(lambda, rs)) dominant.insert(detail::to_ivec(w));

    std::vector<std::size_t> steps;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
        if (root_degree(rs.positive_roots()[k].coeffs, marking) > 0) steps.push_back(k);

    const IVec target = detail::to_ivec(-dual(lambda, rs));
    const IVec start = detail::to_ivec(lambda);
    if (start == target) return 0;
    std::unordered_map<IVec, std::int64_t, detail::IVecHash> dist{{start, 0}};
    std::vector<IVec> frontier{start};
    for (std::int64_t level = 1; !frontier.empty(); ++level) {
        std::vector<IVec> next;
        for (const auto& w : frontier) {
            for (auto k : steps) {
                IVec v = w;
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= sys.root_w[k][j];
                if (dist.count(v) || !dominant.count(sys.dominant(v))) continue;
                if (v == target) return level;
                dist.emplace(v, level);
                next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    throw InternalError("lowest weight unreachable from " + lambda.str());
}

GradingReport module_grading(const Weight& lambda, const ParabolicMarking& marking, const RootSystemData& rs,
                             ComputeContext& ctx, bool module_dims) {
    rs.check_weight(lambda);
    if (!lambda.is_integral() || !lambda.is_dominant()) {
        throw DomainError("module_grading needs a dominant integral weight, got " + lambda.str());
    }
    GradingReport r{marking, {}, 0, 0, 0, {}, {}};
    for (std::size_t i = 0; i < rs.rank(); ++i) r.z_values.emplace(i, z_value(rs.fundamental(i), marking, rs));
    r.k = depth_k(marking, rs);
    r.g_dims = lie_algebra_grading(marking, rs);

    const Rational top = z_value(lambda, marking, rs);
    const Rational span = top - z_value(-dual(lambda, rs), marking, rs);
    if (!span.is_integer()) throw InternalError("grading length of U is not an integer");
    r.f = span.to_integer();
    r.osculating_length = osculating_length(lambda, marking, rs);

    if (module_dims) {
        const auto table = freudenthal(lambda, rs, ctx);
        for (const auto& [w, m] : table.entries()) {
            const Rational level = top - z_value(w, marking, rs);
            if (!level.is_integer()) throw InternalError("weight level of U is not an integer");
            r.u_dims[level.to_integer()] += m;
        }
    }
    return r;
}

GradingReport module_grading(const Weight& lambda, const ParabolicMarking& marking, const RootSystemData& rs) {
    ComputeContext ctx;
    return module_grading(lambda, marking, rs, ctx);
}

}  // namespace rigidity
