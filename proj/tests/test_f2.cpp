#include <random>
#include <stdexcept>

#include "doctest.h"
#include "specseq/f2.hpp"

using namespace specseq;

namespace {

F2Matrix from_bits(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    F2Matrix m(r, c);
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (int b : row) {
            if (b) m.set(i, j);
            ++j;
        }
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rank profile on frozen instances") {
    // identity: rank 3, pivots 0,1,2
    auto rp = rank_profile(F2Matrix::identity(3));
    CHECK(rp.rank == 3);
    CHECK(rp.pivots == std::vector<std::size_t>{0, 1, 2});

    // zero 4x5: rank 0
    CHECK(rank(F2Matrix(4, 5)) == 0);

    // rows 110/011/101 sum to zero: rank 2
    CHECK(rank(from_bits({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
}

TEST_CASE("kernel of the sum-parity matrix") {
    // [1 1] has kernel spanned by (1,1)
    F2Matrix m = from_bits({{1, 1}});
    F2Matrix k = kernel_basis(m);
    REQUIRE(k.rows() == 1);
    CHECK(k.get(0, 0));
    CHECK(k.get(0, 1));
}

TEST_CASE("solve picks the pivot-canonical solution") {
    // [[1,1],[0,1]] x = (1,1)  =>  x = (0,1)
    F2Matrix m = from_bits({{1, 1}, {0, 1}});
    F2Vec b(2);
    b.set(0);
    b.set(1);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK_FALSE(x->get(0));
    CHECK(x->get(1));

    // inconsistent system
    F2Matrix z(2, 2);
    z.set(0, 0);
    F2Vec b2(2);
    b2.set(1);
    CHECK_FALSE(solve(z, b2).has_value());
}

TEST_CASE("subquotient rejects a denominator outside the numerator") {
    F2Matrix num = from_bits({{1, 0, 0}});
    F2Matrix den = from_bits({{0, 1, 0}});
    CHECK_THROWS_AS(subquotient(num, den), std::invalid_argument);
    auto sq = subquotient(from_bits({{1, 0, 0}, {0, 1, 0}}), from_bits({{0, 1, 0}}));
    CHECK(sq.dim == 1);
}

TEST_CASE("randomized identities against a brute-force oracle") {
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + (int)(rng() % 5), m = 1 + (int)(rng() % 5);
        F2Matrix a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (rng() & 1) a.set(i, j);
        // brute-force rank: count distinct nonzero values in the column span
        std::vector<std::uint64_t> span = {0};
        for (int j = 0; j < m; ++j) {
            std::uint64_t col = 0;
            for (int i = 0; i < n; ++i)
                if (a.get(i, j)) col |= (1ull << i);
            std::size_t sz = span.size();
            for (std::size_t k = 0; k < sz; ++k) {
                std::uint64_t v = span[k] ^ col;
                bool seen = false;
                for (auto w : span)
                    if (w == v) seen = true;
                if (!seen) span.push_back(v);
            }
        }
        std::size_t brute = 0;
        while ((std::size_t{1} << brute) < span.size()) ++brute;
        CHECK(rank(a) == brute);
        // rank-nullity
        CHECK(rank(a) + kernel_basis(a).rows() == (std::size_t)m);
        // every kernel row really is killed
        F2Matrix k = kernel_basis(a);
        for (std::size_t i = 0; i < k.rows(); ++i) CHECK(a.apply(k.row(i)).is_zero());
        // transpose has equal rank
        CHECK(rank(a.transposed()) == rank(a));
        // solve round-trip on a reachable vector
        F2Vec x(m);
        for (int j = 0; j < m; ++j)
            if (rng() & 1) x.set(j);
        F2Vec b = a.apply(x);
        auto y = solve(a, b);
        REQUIRE(y.has_value());
        CHECK(a.apply(*y) == b);
    }
}

TEST_CASE("matrix algebra identities") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + (int)(rng() % 6);
        F2Matrix a(n, n), b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (rng() & 1) a.set(i, j);
                if (rng() & 1) b.set(i, j);
            }
        CHECK((a * b).transposed() == b.transposed() * a.transposed());
        auto inv = inverse(a);
        if (inv) CHECK(*inv * a == F2Matrix::identity(n));
    }
}
