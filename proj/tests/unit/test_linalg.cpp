#include "doctest.h"
#include "rigidity/linalg.hpp"

using namespace rigidity;

namespace {

QMatrix from(std::initializer_list<std::initializer_list<int>> rows) {
    QMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (int v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rank over Q") {
    CHECK(rank(from({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(from({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank(QMatrix::identity(5)) == 5);
    CHECK(rank(QMatrix(3, 4)) == 0);
    QMatrix q(2, 2);
    q(0, 0) = mpq_class(1, 3);
    q(0, 1) = mpq_class(1, 2);
    q(1, 0) = mpq_class(2, 3);
    q(1, 1) = 1;
    CHECK(rank(q) == 1);
    // Hilbert matrices are nonsingular; a good stress for exact elimination
    QMatrix h(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) h(i, j) = mpq_class(1, i + j + 1);
    CHECK(rank(h) == 8);
}

TEST_CASE("kernel") {
    const auto m = from({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    const auto k = kernel(m);
    REQUIRE(k.size() == 1);
    for (std::size_t i = 0; i < 3; ++i) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * k[0][j];
        CHECK(s == 0);
    }
    CHECK(kernel(QMatrix::identity(3)).empty());
    CHECK(kernel(QMatrix(2, 3)).size() == 3);
}

TEST_CASE("products, commutators, Kronecker") {
    const auto e = from({{0, 1}, {0, 0}});
    const auto f = from({{0, 0}, {1, 0}});
    const auto h = from({{1, 0}, {0, -1}});
    CHECK(commutator(e, f) == h);
    CHECK(commutator(h, e) == mpq_class(2) * e);
    CHECK(commutator(h, f) == mpq_class(-2) * f);
    const auto k = kron(h, QMatrix::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k.is_diagonal());
    CHECK(k(2, 2) == -1);
    CHECK((e * f - f * e) == h);
    CHECK((e + f).is_zero() == false);
    CHECK((e - e).is_zero());
}
