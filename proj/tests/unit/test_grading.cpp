#include "doctest.h"
#include "helpers.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/grading.hpp"

using namespace rigidity;
using test::sys;

TEST_CASE("Z-values of fundamental weights") {
    auto rs = sys("A2");
    const ParabolicMarking both({0, 1}, 2);
    CHECK(z_value(Weight{1, 0}, both, *rs) == Rational(1));
    CHECK(z_value(Weight{1, 1}, both, *rs) == Rational(2));
    const ParabolicMarking first({0}, 2);
    CHECK(z_value(Weight{1, 0}, first, *rs) == Rational(2, 3));
    CHECK(z_value(Weight{0, 1}, first, *rs) == Rational(1, 3));
    // Z(α_i) = 1 for marked simple roots, 0 otherwise
    auto e7 = sys("E7");
    const ParabolicMarking m7({6}, 7);
    for (std::size_t i = 0; i < 7; ++i) CHECK(z_value(e7->simple_root(i), m7, *e7) == Rational(i == 6 ? 1 : 0));
}

TEST_CASE("grading depth and dimensions of the graded pieces") {
    auto e8 = sys("E8");
    const ParabolicMarking m1({0}, 8);
    CHECK(depth_k(m1, *e8) == 2);
    const auto g = lie_algebra_grading(m1, *e8);
    CHECK(g.at(0) == 92);  // so(14) + C
    CHECK(g.at(1) == 64);
    CHECK(g.at(2) == 14);
    std::int64_t total = 0;
    for (auto [d, n] : g) total += n;
    CHECK(total == 248);

    auto a3 = sys("A3");
    CHECK(depth_k(ParabolicMarking({0, 2}, 3), *a3) == 2);
    CHECK(depth_k(ParabolicMarking({1}, 3), *a3) == 1);
    CHECK_THROWS_AS(depth_k(ParabolicMarking({0}, 4), *sys("A1xA3")), DomainError);
}

TEST_CASE("E8/P1: lengths and graded dimensions of U") {
    auto e8 = sys("E8");
    const Weight w1{1, 0, 0, 0, 0, 0, 0, 0};
    const auto r = module_grading(w1, ParabolicMarking::support_of(w1), *e8);
    CHECK(r.k == 2);
    CHECK(r.osculating_length == 4);
    CHECK(r.f == 8);  // = 2 Z(ω_1) since ω_1 is self-dual
    CHECK(r.f == 2 * r.z_values.at(0).to_integer());
    const std::int64_t expected[] = {1, 64, 378, 896, 1197, 896, 378, 64, 1};
    REQUIRE(r.u_dims.size() == 9);
    std::int64_t sum = 0;
    for (int j = 0; j <= 8; ++j) {
        CHECK(r.u_dims.at(j) == expected[j]);
        sum += r.u_dims.at(j);
    }
    CHECK(sum == 3875);
}

TEST_CASE("quadrics, Veronese and Segre") {
    // v_2(P^1): conic
    auto a1 = sys("A1");
    const auto conic = module_grading(Weight{2}, ParabolicMarking({0}, 1), *a1);
    CHECK(conic.f == 2);
    CHECK(conic.osculating_length == 2);
    // quadric Q^5 ⊂ P^6
    auto b3 = sys("B3");
    const auto q = module_grading(Weight{1, 0, 0}, ParabolicMarking({0}, 3), *b3);
    CHECK(q.f == 2);
    CHECK(q.u_dims.at(0) == 1);
    CHECK(q.u_dims.at(1) == 5);
    CHECK(q.u_dims.at(2) == 1);
    // Segre P^1 x P^2
    auto s = sys("A1xA2");
    const auto seg = module_grading(Weight{1, 1, 0}, ParabolicMarking({0, 1}, 3), *s);
    CHECK(seg.f == 2);
    CHECK(seg.u_dims.at(1) == 3);
    // Grassmannian G(2,4): quadric again
    const auto gr = module_grading(Weight{0, 1, 0}, ParabolicMarking({1}, 3), *sys("A3"));
    CHECK(gr.f == 2);
    CHECK(gr.u_dims.at(1) == 4);
}

TEST_CASE("osculating length never exceeds f") {
    const char* lits[] = {"A2", "B3", "C3", "G2", "A1xA2", "D4"};
    for (const char* lit : lits) {
        auto rs = sys(lit);
        for (int t = 0; t < 5; ++t) {
            Weight lam = test::random_dominant(rs->rank(), 2);
            if (lam.is_zero()) lam[0] = Rational(1);
            bool every_component = true;
            for (const auto& part : rs->split(lam)) every_component = every_component && !part.is_zero();
            if (!every_component) continue;
            ComputeContext ctx;
            const auto r = module_grading(lam, ParabolicMarking::support_of(lam), *rs, ctx, false);
            CAPTURE(lit);
            CAPTURE(lam.str());
            CHECK(r.osculating_length <= r.f);
            CHECK(r.osculating_length >= 1);
            CHECK(r.u_dims.empty());
        }
    }
}

TEST_CASE("root degrees") {
    CHECK(root_degree({1, 2, 1}, ParabolicMarking({0, 2}, 3)) == 2);
    CHECK(root_degree({0, 1, 0}, ParabolicMarking({0, 2}, 3)) == 0);
}
