#include <map>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/kostant.hpp"
#include "rigidity/oracle.hpp"

using namespace rigidity;

namespace {

std::map<Rational, std::int64_t> predicted(const MatrixRep& rep, std::int64_t d_max) {
    const auto& rs = rep.algebra().roots();
    const auto m = ParabolicMarking::support_of(rep.highest_weight());
    std::map<Rational, std::int64_t> out;
    for (const auto& [d, n] : h1_dims_by_degree(h1(gperp(rep.highest_weight(), rs), m, rs)))
        if (d <= Rational(d_max)) out[d] = n;
    return out;
}

std::map<Rational, std::int64_t> brute(const MatrixRep& rep, std::int64_t d_max) {
    const auto dims = h1_dims(rep, ParabolicMarking::support_of(rep.highest_weight()), d_max);
    CHECK(dims.blocks_checked > 0);
    std::map<Rational, std::int64_t> out;
    for (const auto& d : dims.degrees)
        if (d.h1) out[d.degree] = d.h1;
    return out;
}

MatrixRep rep_of(const std::string& lit, const std::string& spec, RootOrder order = RootOrder::standard) {
    return build_rep(RepSpec::parse(spec), build_chevalley(DynkinDiagram::parse(lit), order));
}

}  // namespace

TEST_CASE("property: Jacobi identity for every type of rank at most 4") {
    const char* lits[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A1xA2"};
    for (const char* lit : lits) {
        CAPTURE(lit);
        for (auto order : {RootOrder::standard, RootOrder::reversed}) {
            std::shared_ptr<const ChevalleyAlgebra> alg;
            CHECK_NOTHROW(alg = build_chevalley(DynkinDiagram::parse(lit), order));
            CHECK(alg->verify_jacobi() > 0);
        }
    }
}

TEST_CASE("Chevalley basis brackets") {
    const auto alg = build_chevalley(DynkinDiagram::parse("A2"));
    CHECK(alg->dim() == 8);
    // [e_α1, e_α2] = ±e_{α1+α2}
    const auto& b = alg->bracket(alg->e(0), alg->e(1));
    REQUIRE(b.size() == 1);
    CHECK(b[0].first == *alg->root_vector({1, 1}));
    CHECK((b[0].second == 1 || b[0].second == -1));
    // [e_α, e_-α] = h_α
    const auto& h = alg->bracket(alg->e(0), alg->f(0));
    REQUIRE(h.size() == 1);
    CHECK(h[0].first == alg->h(0));
    // G2: |N| = p + 1 on every root string
    const auto g2 = build_chevalley(DynkinDiagram::parse("G2"));
    CHECK(std::abs(g2->structure_constant(g2->simple_index(0), g2->simple_index(1))) == 1);
}

TEST_CASE("rep specs") {
    CHECK(RepSpec::parse("sym^3(defining)").str() == "sym^3(defining)");
    CHECK(RepSpec::parse("defining*adjoint").factors.size() == 2);
    CHECK(RepSpec::parse("defining⊠defining").factors.size() == 2);
    CHECK_THROWS(RepSpec::parse("sym^0(defining)"));
    CHECK_THROWS(RepSpec::parse("tensor(defining)"));
    CHECK_THROWS(RepSpec::parse(""));
}

TEST_CASE("matrix representations have the expected highest weights") {
    CHECK(rep_of("A1", "sym^3(defining)").highest_weight() == Weight{3});
    CHECK(rep_of("A3", "ext^2(defining)").highest_weight() == Weight{0, 1, 0});
    CHECK(rep_of("B3", "defining").dim() == 7);
    CHECK(rep_of("C3", "defining").highest_weight() == Weight{1, 0, 0});
    CHECK(rep_of("D4", "defining").dim() == 8);
    CHECK(rep_of("G2", "adjoint").highest_weight() == Weight{0, 1});
    CHECK(rep_of("A1xA2", "defining*defining").highest_weight() == Weight{1, 1, 0});
    // ext^2 of the 4-dim rep of C2 is reducible (5 + 1): rejected
    CHECK_THROWS(rep_of("C2", "ext^2(defining)"));
    const auto r = rep_spec_for_weight(Weight{2, 0}, *test::sys("A2"));
    REQUIRE(r.has_value());
    CHECK(r->str() == "sym^2(defining)");
    CHECK_FALSE(rep_spec_for_weight(Weight{1, 0}, *test::sys("G2")).has_value());
}

TEST_CASE("Γ is the g-stable trace complement") {
    const auto rep = rep_of("A2", "sym^2(defining)");
    const auto m = ParabolicMarking::support_of(rep.highest_weight());
    const auto gamma = gperp_matrices(rep, m);
    CHECK(gamma.vectors.size() == 36 - 1 - 8);
    CHECK(gamma_is_stable(rep, gamma));
}

TEST_CASE("oracle equals Kostant") {
    struct Case {
        const char* lit;
        const char* spec;
        std::int64_t d_max;
    } cases[] = {
        {"A1", "sym^2(defining)", 3}, {"A1", "sym^3(defining)", 3}, {"A1", "sym^4(defining)", 3},
        {"A2", "adjoint", 2},         {"A2", "sym^2(defining)", 2}, {"A1xA2", "defining*defining", 2},
        {"A1xA3", "defining*defining", 2}, {"B2", "defining", 2},   {"C2", "defining", 2},
        {"D4", "defining", 2},        {"A3", "ext^2(defining)", 2}, {"G2", "adjoint", 2},
    };
    for (const auto& c : cases) {
        CAPTURE(c.lit);
        CAPTURE(c.spec);
        const auto rep = rep_of(c.lit, c.spec);
        CHECK(brute(rep, c.d_max) == predicted(rep, c.d_max));
    }
}

TEST_CASE("oracle is independent of the root ordering") {
    for (const char* spec : {"adjoint", "sym^2(defining)"}) {
        const auto a = rep_of("A2", spec, RootOrder::standard);
        const auto b = rep_of("A2", spec, RootOrder::reversed);
        CHECK(brute(a, 2) == brute(b, 2));
    }
}

TEST_CASE("oracle caps and arguments") {
    const auto rep = rep_of("A1", "sym^2(defining)");
    CHECK_THROWS_AS(h1_dims(rep, ParabolicMarking({0}, 1), 0), DomainError);
    OracleLimits tiny;
    tiny.max_rep_dim = 2;
    CHECK_THROWS_AS(build_rep(RepSpec::parse("sym^2(defining)"), build_chevalley(DynkinDiagram::parse("A1")), tiny),
                    ResourceError);
}
