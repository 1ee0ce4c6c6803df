#include <random>

#include "doctest.h"
#include "specseq/operations.hpp"

using namespace specseq;

TEST_CASE("well-definedness page table") {
    // horizontal edge of the range
    CHECK(w_page(2, 1, 1, 0) == 2);
    CHECK(w_page(3, 2, 2, 0) == 3);
    // low internal degrees land on page 2r - 2
    CHECK(w_page(2, 1, 1, 1) == 2);
    CHECK(w_page(3, 2, 2, 1) == 4);
    // otherwise r + t - m
    CHECK(w_page(3, 2, 2, 2) == 3);
    CHECK(w_page(2, 1, 2, 1) == 2);  // m = t - s: the bottom horizontal operation
    CHECK(w_page(2, 1, 2, 2) == 2);  // every r = 2 horizontal case lands on page 2
}

TEST_CASE("fundamental cycle validates and survives the ambient round trip") {
    HostPipeline host(universal_example(2, 1, 1, 5));
    RCycle i = iota(2, 1, 1, host.cy);
    validate_rcycle(i, host.cy.cx);
    CHECK(i.comp.count(1));
    CHECK(i.comp.count(2));
    F2Vec amb = rcycle_ambient(i, *host.fc);
    CHECK_FALSE(amb.is_zero());
    RCycle back = rcycle_from_ambient(amb, 2, 1, 1, *host.fc);
    for (auto& [p, v] : i.comp) CHECK(back.at(p, host.cy.cx) == i.at(p, host.cy.cx));

    BicomplexMap f = representing_cmap(i, host.cy, host.cy);
    f.validate(host.cy.cx, host.cy.cx);
}

TEST_CASE("random page cycles are honest cycles") {
    HostPipeline host(universal_example(2, 1, 1, 5));
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        RCycle rc = random_rcycle(*host.ss, *host.fc, 2, 1, 1, rng);
        validate_rcycle(rc, host.cy.cx);
        F2Vec amb = rcycle_ambient(rc, *host.fc);
        CHECK(in_row_space(host.ss->zspace(2, 1, 1), amb));
    }
}

TEST_CASE("external operations on the fundamental class of the universal example") {
    int r = 2, s = 1, t = 1, cap = 5, wcap = 6;
    Cosimplicial y = universal_example(r, s, t, cap);
    Conormalization cy = conormalize(y);
    OrbitPipeline oy(y, wcap);
    RCycle i = iota(r, s, t, cy);
    ExternalOpCtx ctx(y, cy, oy, i);

    // the bottom horizontal operation is the external square
    OpResult sq = ctx.horizontal(t - s);
    OpResult prod = external_product(i, i, y, cy, oy);
    CHECK(sq.page == r);
    CHECK(sq.s == prod.s);
    CHECK(sq.t == prod.t);
    CHECK_FALSE(prod.zero);  // the square of the fundamental class is nonzero
    CHECK(sq.coords == prod.coords);

    // a vertical operation lands in the stated bidegree and is a real class
    OpResult v = ctx.vertical(t);
    CHECK(v.page == r);
    CHECK(v.s == s);
    CHECK(v.t == 2 * t);
    auto cc = oy.ss->class_coords(r, v.s, v.t, v.rep);
    REQUIRE(cc.has_value());
    CHECK(*cc == v.coords);
    CHECK(v.zero == v.coords.is_zero());

    OpResult v1 = ctx.vertical(t + 1);
    CHECK(v1.t == 2 * t + 1);
    auto cc1 = oy.ss->class_coords(r, v1.s, v1.t, v1.rep);
    REQUIRE(cc1.has_value());
    CHECK(*cc1 == v1.coords);
}
