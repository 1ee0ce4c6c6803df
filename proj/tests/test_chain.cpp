#include "doctest.h"
#include "specseq/chain.hpp"

using namespace specseq;

TEST_CASE("chains of the standard simplex") {
    ChainComplex c = delta_chains(3);
    c.validate();
    CHECK(c.dim(0) == 4);
    CHECK(c.dim(1) == 6);
    CHECK(c.dim(2) == 4);
    CHECK(c.dim(3) == 1);
    auto h = homology(c);
    CHECK(h.at(0).dim == 1);  // contractible
    for (int k = 1; k <= 3; ++k)
        if (h.count(k)) CHECK(h.at(k).dim == 0);
}

TEST_CASE("skeleton homology matches the sphere") {
    // boundary of the 3-simplex is a 2-sphere
    ChainComplex c = skeleton(delta_chains(3), 2);
    auto h = homology(c);
    CHECK(h.at(0).dim == 1);
    CHECK(h.at(1).dim == 0);
    CHECK(h.at(2).dim == 1);
}

TEST_CASE("quotient and shift") {
    ChainComplex c = delta_chains(2);
    ChainComplex q = quotient_below(c, 1);
    q.validate();
    CHECK(q.dim(0) == 0);
    CHECK(q.dim(1) == 3);
    CHECK(q.dim(2) == 1);
    auto h = homology(q);
    // chains of Delta^2 rel its vertices: H_1 has rank 2
    CHECK(h.at(1).dim == 2);
    CHECK(h.at(2).dim == 0);

    ChainComplex s = shift(q, 3);
    s.validate();
    CHECK(s.dim(4) == 3);
    CHECK(homology(s).at(4).dim == 2);
}

TEST_CASE("splitting operator is a contracting homotopy off the top") {
    // S d + d S = id on the non-based part: check the defining property
    // d(S x) + S(d x) = x for x a non-based generator below the top degree.
    for (int p = 2; p <= 5; ++p) {
        ChainComplex c = delta_chains(p);
        for (int k = 1; k < p; ++k) {
            F2Matrix sd = splitting_matrix(p, k - 1) * c.boundary(k);
            F2Matrix ds = c.boundary(k + 1) * splitting_matrix(p, k);
            CHECK(ds + sd == F2Matrix::identity(c.dim(k)));
        }
    }
}
