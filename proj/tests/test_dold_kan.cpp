#include "doctest.h"
#include "specseq/dold_kan.hpp"

using namespace specseq;

TEST_CASE("levelwise basis change is invertible and exhausts the level") {
    Cosimplicial y = universal_example(2, 1, 1, 4);
    Conormalization cy = conormalize(y);
    DoldKanCtx ctx(y, cy);
    for (int p = 0; p <= 4; ++p)
        for (auto& [q, labels] : y.level[p].basis) {
            if (labels.empty()) continue;
            const F2Matrix& phi = ctx.phi(p, q);
            const F2Matrix& inv = ctx.phi_inv(p, q);
            CHECK(phi * inv == F2Matrix::identity(labels.size()));
            int ncols = 0;
            for (auto& blk : ctx.columns(p, q)) ncols += blk.ncols;
            CHECK(ncols == (int)labels.size());
        }
}

TEST_CASE("lift of the identity column map is the identity") {
    Cosimplicial y = universal_example(2, 1, 1, 4);
    Conormalization cy = conormalize(y);
    DoldKanCtx ctx(y, cy);
    BicomplexMap id;
    for (auto& [pq, labels] : cy.cx.basis)
        if (!labels.empty()) id.blocks[pq] = F2Matrix::identity(labels.size());
    CosimplicialMap g = dold_kan_lift(id, ctx, ctx);
    g.validate(y, y);
    for (int p = 0; p <= 4; ++p)
        for (auto& [q, labels] : y.level[p].basis)
            if (!labels.empty())
                CHECK(g.at(p, q, y, y) == F2Matrix::identity(labels.size()));
}

TEST_CASE("lift reproduces the column-level map it came from") {
    Cosimplicial a = universal_example(2, 1, 1, 4);
    Cosimplicial s = direct_sum(a, a);
    Conormalization ca = conormalize(a), cs = conormalize(s);
    BicomplexMap g = conormalized_map(diagonal_map(a), a, s, ca, cs);
    DoldKanCtx ctx_a(a, ca), ctx_s(s, cs);
    CosimplicialMap f = dold_kan_lift(g, ctx_a, ctx_s);
    f.validate(a, s);
    BicomplexMap back = conormalized_map(f, a, s, ca, cs);
    for (auto& [pq, labels] : ca.cx.basis) {
        F2Matrix want = g.at(pq.first, pq.second, ca.cx, cs.cx);
        F2Matrix got = back.at(pq.first, pq.second, ca.cx, cs.cx);
        CHECK(want == got);
    }
}
