#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/grading.hpp"
#include "rigidity/kostant.hpp"
#include "rigidity/weyl.hpp"

using namespace rigidity;
using test::sys;

TEST_CASE("property: closed form for Z(σ_i.λ) on 200 random inputs") {
    const char* lits[] = {"A1", "A3", "B3", "C4", "D5", "E6", "F4", "G2", "A1xB2", "E8"};
    std::uniform_int_distribution<int> pick(0, 9);
    int checked = 0;
    while (checked < 200) {
        auto rs = sys(lits[pick(test::rng())]);
        const Weight lam = test::random_dominant(rs->rank(), 4);
        std::vector<std::size_t> nodes;
        for (std::size_t i = 0; i < rs->rank(); ++i)
            if (test::rng()() % 2) nodes.push_back(i);
        if (nodes.empty()) continue;
        const ParabolicMarking m(nodes, rs->rank());
        for (auto i : nodes) {
            const Rational direct = z_value(affine_action(ReflectionWord{{i}}, lam, *rs), m, *rs);
            CHECK(direct == z_value(lam, m, *rs) - lam[i] - Rational(1));
            CHECK(direct == z_of_reflected(lam, i, m, *rs));
        }
        ++checked;
    }
    CHECK_THROWS_AS(z_of_reflected(Weight{1, 0}, 1, ParabolicMarking({0}, 2), *sys("A2")), DomainError);
}

TEST_CASE("A2 adjoint: two degree-1 obstructions for p = -1, rigid for p = 0") {
    auto rs = sys("A2");
    const auto not_rigid = certify(Weight{1, 1}, -1, *rs);
    CHECK_FALSE(not_rigid.rigid);
    REQUIRE(not_rigid.obstructions.size() == 2);
    for (const auto& o : not_rigid.obstructions) {
        CHECK(o.degree == Rational(1));
        CHECK(o.g0_dimension == 1);
    }
    CHECK(not_rigid.obstructions[0].reflected_weight == Weight{-5, 4});
    CHECK(not_rigid.obstructions[1].reflected_weight == Weight{4, -5});
    CHECK(not_rigid.total_obstruction_dimension == 2);
    CHECK(not_rigid.note.has_value());
    CHECK(not_rigid.system_name == "(I_-1^f, Ω)");

    const auto rigid = certify(Weight{1, 1}, 0, *rs);
    CHECK(rigid.rigid);
    CHECK(rigid.informational.size() == 8);
    CHECK_THROWS_AS(certify(Weight{1, 1}, -2, *rs), DomainError);
}

TEST_CASE("conic: one component of weight -6ω_1 in degree 3") {
    auto rs = sys("A1");
    const auto comps = h1(gperp(Weight{2}, *rs), ParabolicMarking({0}, 1), *rs);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].source_weight == Weight{4});
    CHECK(comps[0].reflected_weight == Weight{-6});
    CHECK(comps[0].degree == Rational(3));
    CHECK(comps[0].total_dimension() == 1);
    CHECK_FALSE(certify(Weight{2}, 1, *rs).rigid);
    CHECK(certify(Weight{2}, 2, *rs).rigid);
}

TEST_CASE("Segre P^1 x P^3 has a degree-1 component") {
    auto rs = sys("A1xA3");
    const Weight lam{1, 1, 0, 0};
    const auto comps = h1(gperp(lam, *rs), ParabolicMarking::support_of(lam), *rs);
    const auto dims = h1_dims_by_degree(comps);
    REQUIRE(dims.count(Rational(1)) == 1);
    CHECK(dims.at(Rational(1)) == 3);
    CHECK(comps.front().degree == Rational(1));
    CHECK(comps.front().reflected_weight == Weight{-4, 1, 0, 1});
    CHECK(comps.front().g0_dimension == 3);
    CHECK_FALSE(certify(lam, -1, *rs).rigid);
}

TEST_CASE("Veronese: rigid for p = 0, obstruction degrees are 1") {
    for (int n = 2; n <= 4; ++n) {
        auto rs = sys("A" + std::to_string(n));
        for (int d = 2; d <= 4; ++d) {
            Weight lam(static_cast<std::size_t>(n));
            lam[0] = Rational(d);
            CAPTURE(n);
            CAPTURE(d);
            const auto v = certify(lam, 0, *rs);
            CHECK(v.rigid);
            const auto comps = h1(gperp(lam, *rs), ParabolicMarking::support_of(lam), *rs);
            for (const auto& c : comps) CHECK(c.degree == Rational(1));
        }
    }
}

TEST_CASE("rank-three and exceptional suite") {
    struct Case {
        const char* lit;
        Weight lam;
        bool quadric;
    };
    const Case cases[] = {
        {"B3", Weight{1, 0, 0}, true},  {"B3", Weight{0, 1, 0}, false}, {"B3", Weight{0, 0, 1}, false},
        {"C3", Weight{1, 0, 0}, false}, {"C3", Weight{0, 1, 0}, false}, {"C3", Weight{0, 0, 1}, false},
        {"D4", Weight{1, 0, 0, 0}, true}, {"D4", Weight{0, 1, 0, 0}, false}, {"D4", Weight{0, 0, 1, 0}, true},
        {"D4", Weight{0, 0, 0, 1}, true}, {"G2", Weight{1, 0}, true},  {"G2", Weight{0, 1}, false},
        {"F4", Weight{1, 0, 0, 0}, false}, {"F4", Weight{0, 0, 0, 1}, false},
    };
    for (const auto& c : cases) {
        auto rs = sys(c.lit);
        CAPTURE(c.lit);
        CAPTURE(c.lam.str());
        const auto v = certify(c.lam, -1, *rs);
        if (!c.quadric) CHECK(v.rigid);
        const auto g = gperp(c.lam, *rs);
        const auto n = weyl_dim(c.lam, *rs);
        CHECK(g.total_dimension(*rs) == n * n - 1 - static_cast<std::int64_t>(rs->dimension()));
    }
    // quadrics of B and D type carry a degree-1 obstruction
    CHECK_FALSE(certify(Weight{1, 0, 0}, -1, *sys("B3")).rigid);
    CHECK_FALSE(certify(Weight{1, 0, 0, 0}, -1, *sys("D4")).rigid);
}

TEST_CASE("components are sorted by degree, then source weight") {
    auto rs = sys("A3");
    const Weight lam{1, 0, 1};
    const auto comps = h1(gperp(lam, *rs), ParabolicMarking::support_of(lam), *rs);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        CHECK(comps[i - 1].degree >= comps[i].degree);
        if (comps[i - 1].degree == comps[i].degree) CHECK(comps[i - 1].source_weight >= comps[i].source_weight);
    }
}

TEST_CASE("quick vanishing test") {
    CHECK(quick_vanishing_test(Weight{0, 0, 0, 0, 0, 0, 0, 1}, *sys("E8")) == QuickVanishing::vanishes_for_d_ge_1);
    CHECK(quick_vanishing_test(Weight{1, 0, 0}, *sys("B3")) == QuickVanishing::vanishes_for_d_gt_1);
    CHECK(quick_vanishing_test(Weight{1, 1}, *sys("A2")) == QuickVanishing::inconclusive);
    CHECK(std::string(to_string(QuickVanishing::inconclusive)) == "inconclusive");
}

TEST_CASE("adjoint detection") {
    CHECK(is_adjoint_weight(Weight{1, 0, 1}, *sys("A3")));
    CHECK(is_adjoint_weight(Weight{0, 1}, *sys("G2")));
    CHECK_FALSE(is_adjoint_weight(Weight{1, 0}, *sys("G2")));
    CHECK_FALSE(certify(Weight{1, 0}, -1, *sys("A2")).note.has_value());
}
