#include "rigidity/kostant.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"
#include "rigidity/grading.hpp"
#include "rigidity/weyl.hpp"

namespace rigidity {

const char* to_string(QuickVanishing q) {
    switch (q) {
        case QuickVanishing::vanishes_for_d_ge_1: return "vanishes_for_d_ge_1";
        case QuickVanishing::vanishes_for_d_gt_1: return "vanishes_for_d_gt_1";
        case QuickVanishing::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Rational z_of_reflected(const Weight& lambda, std::size_t i0, const ParabolicMarking& marking,
                        const RootSystemData& rs) {
    if (!marking.contains(i0)) {
        throw DomainError("node " + std::to_string(i0 + 1) + " is not in the marking " + marking.str());
    }
    return z_value(lambda, marking, rs) - lambda[i0] - Rational(1);
}

std::vector<H1Component> h1(const ModuleDecomposition& gamma, const ParabolicMarking& marking,
                            const RootSystemData& rs) {
    std::vector<H1Component> out;
    for (const auto& [lam, mult] : gamma.entries()) {
        if (!lam.is_integral() || !lam.is_dominant()) {
            throw DomainError("constituent " + lam.str() + " is not dominant integral");
        }
        for (auto i : marking.nodes()) {
            H1Component c;
            c.source_weight = lam;
            c.source_multiplicity = mult;
            c.node = i;
            c.reflected_weight = affine_action(ReflectionWord{{i}}, lam, rs);
            c.degree = -z_value(c.reflected_weight, marking, rs);
            if (c.degree != -z_of_reflected(lam, i, marking, rs)) {
                throw InternalError("closed-form Z(σ.λ) disagrees with the affine action at " + lam.str());
            }
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                if (!marking.contains(j) && c.reflected_weight[j].sign() < 0) {
                    throw InternalError("σ_i.λ is not Levi-dominant at " + lam.str());
                }
            }
            c.g0_dimension = levi_dim(c.reflected_weight, marking, rs);
            out.push_back(std::move(c));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const H1Component& a, const H1Component& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        if (a.source_weight != b.source_weight) return a.source_weight > b.source_weight;
        return a.node < b.node;
    });
    return out;
}

std::map<Rational, std::int64_t> h1_dims_by_degree(const std::vector<H1Component>& comps) {
    std::map<Rational, std::int64_t> dims;
    for (const auto& c : comps) dims[c.degree] += c.total_dimension();
    return dims;
}

bool is_adjoint_weight(const Weight& lambda, const RootSystemData& rs) {
    for (std::size_t c = 0; c < rs.diagram().num_components(); ++c) {
        Weight rest = lambda - rs.adjoint_weight(c);
        if (rest.is_zero()) return true;
    }
    return false;
}

RigidityVerdict verdict_from(const std::vector<H1Component>& comps, std::int64_t p, const Weight& lambda,
                             const RootSystemData& rs) {
    if (p < -1) throw DomainError("p must be at least -1, got " + std::to_string(p));
    RigidityVerdict v;
    v.p = p;
    v.system_name = "(I_" + std::to_string(p) + "^f, Ω)";
    const Rational threshold(p + 2);
    for (const auto& c : comps) {
        if (c.degree >= threshold) {
            v.obstructions.push_back(c);
            v.total_obstruction_dimension += c.total_dimension();
        } else {
            v.informational.push_back(c);
        }
    }
    v.rigid = v.obstructions.empty();
    if (is_adjoint_weight(lambda, rs)) {
        v.note = "adjoint variety: rigidity of the (I_{-1}^f, Ω) system corresponds to third-order Fubini "
                 "rigidity; this note is explanatory and not computed";
    }
    return v;
}

RigidityVerdict certify(const Weight& lambda, std::int64_t p, const RootSystemData& rs, ComputeContext& ctx) {
    if (p < -1) throw DomainError("p must be at least -1, got " + std::to_string(p));
    const auto gamma = gperp(lambda, rs, ctx);
    const auto marking = ParabolicMarking::support_of(lambda);
    return verdict_from(h1(gamma, marking, rs), p, lambda, rs);
}

RigidityVerdict certify(const Weight& lambda, std::int64_t p, const RootSystemData& rs) {
    ComputeContext ctx;
    return certify(lambda, p, rs, ctx);
}

QuickVanishing quick_vanishing_test(const Weight& lambda, const RootSystemData& rs) {
    const auto marking = ParabolicMarking::support_of(lambda);
    bool all_gt = true, all_ge = true;
    for (auto i : marking.nodes()) {
        const Rational& d = rs.inverse_cartan(i, i);
        if (!(d > Rational(1))) all_gt = false;
        if (d < Rational(1)) all_ge = false;
    }
    if (all_gt) return QuickVanishing::vanishes_for_d_ge_1;
    if (all_ge) return QuickVanishing::vanishes_for_d_gt_1;
    return QuickVanishing::inconclusive;
}

}  // namespace rigidity
