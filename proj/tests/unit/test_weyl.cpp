#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "rigidity/weyl.hpp"

using namespace rigidity;
using test::sys;

TEST_CASE("simple reflections") {
    auto rs = sys("A2");
    CHECK(reflect(0, Weight{1, 0}, *rs) == Weight{-1, 1});
    CHECK(reflect(1, Weight{-1, 1}, *rs) == Weight{0, -1});
    auto g2 = sys("G2");
    for (std::size_t i = 0; i < 2; ++i) CHECK(reflect(i, reflect(i, Weight{2, -3}, *g2), *g2) == Weight{2, -3});
}

TEST_CASE("affine action fixes -rho and matches the closed form for one reflection") {
    auto rs = sys("B3");
    const Weight minus_rho = -rs->rho();
    for (std::size_t i = 0; i < 3; ++i) CHECK(affine_action(ReflectionWord{{i}}, minus_rho, *rs) == minus_rho);
    // σ_i.λ = λ - (λ^i + 1) α_i
    const Weight lam{2, 0, 1};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(affine_action(ReflectionWord{{i}}, lam, *rs) ==
              lam - (lam[i] + Rational(1)) * rs->simple_root(i));
    }
}

TEST_CASE("Weyl group orders from the regular orbit") {
    struct Case {
        const char* lit;
        std::size_t order;
    } cases[] = {{"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"C3", 48},
                 {"D4", 192}, {"G2", 12}, {"F4", 1152}, {"A1xA2", 12}};
    for (const auto& c : cases) {
        auto rs = sys(c.lit);
        CAPTURE(c.lit);
        const auto orbit = weyl_orbit(rs->rho(), *rs);
        CHECK(orbit.size() == c.order);
        CHECK(std::set<Weight>(orbit.begin(), orbit.end()).size() == c.order);
    }
    CHECK(weyl_orbit(Weight{1, 0, 0, 0, 0, 0, 0, 0}, *sys("E8")).size() == 2160);
    CHECK(weyl_orbit(Weight{1, 0, 0, 0, 0, 0}, *sys("E6")).size() == 27);
}

TEST_CASE("dominant representatives") {
    auto rs = sys("A3");
    for (const auto& w : weyl_orbit(Weight{1, 0, 1}, *rs)) CHECK(dominant_representative(w, *rs) == Weight{1, 0, 1});
}

TEST_CASE("dominant_with_sign inverts the affine action") {
    auto rs = sys("C3");
    for (int t = 0; t < 100; ++t) {
        const Weight lam = test::random_dominant(3, 3);
        for (const auto& v : weyl_orbit(lam + rs->rho(), *rs)) {
            const Weight w = v - rs->rho();
            const auto r = dominant_with_sign(w, *rs);
            CHECK(r.dominant == lam);
            CHECK(affine_action(r.word, r.dominant, *rs) == w);
            CHECK(r.sign == (r.word.length() % 2 ? -1 : 1));
        }
    }
    // on a wall: -ρ shifted by 0 is singular
    CHECK(dominant_with_sign(Weight{-1, 0, 0}, *rs).sign == 0);
}
