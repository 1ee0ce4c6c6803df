#include <stdexcept>

#include "doctest.h"
#include "specseq/spectral.hpp"

using namespace specseq;

namespace {

// Two columns joined by an isomorphism: x at (0,0), y at (1,0).
Bicomplex two_cell() {
    Bicomplex b;
    b.basis[{0, 0}] = {"x"};
    b.basis[{1, 0}] = {"y"};
    F2Matrix id(1, 1);
    id.set(0, 0);
    b.horiz[{0, 0}] = id;
    b.validate();
    return b;
}

ChainComplex column_complex(const Bicomplex& b, int p) {
    ChainComplex c;
    for (auto& [pq, labels] : b.basis)
        if (pq.first == p && !labels.empty()) {
            c.basis[pq.second] = labels;
            F2Matrix v = b.vertical(p, pq.second);
            if (v.rows()) c.diff[pq.second] = v;
        }
    return c;
}

}  // namespace

TEST_CASE("filtered total complex squares to zero and indexes its blocks") {
    Cosimplicial d = universal_example(2, 1, 1, 5);
    Conormalization c = conormalize(d);
    FilteredComplex f(c.cx, full_window(c.cx));
    const Window& w = f.window();
    for (int n = w.nlo; n <= w.nhi; ++n) {
        int total = 0;
        for (auto& [p, off] : f.blocks(n)) {
            CHECK(f.offset(n, p) == off);
            total += c.cx.dim(p, n + p);
        }
        CHECK(f.ambient_dim(n) == total);
        if (n - 2 >= w.nlo) CHECK((f.boundary(n - 1) * f.boundary(n)).is_zero());
    }
    // filtration starts are monotone in s
    for (int n = w.nlo; n <= w.nhi; ++n)
        for (int s = 0; s < 6; ++s)
            CHECK(f.filtration_start(n, s) <= f.filtration_start(n, s + 1));
}

TEST_CASE("first page is the vertical homology of the columns") {
    Cosimplicial d = universal_example(2, 1, 1, 5);
    Conormalization c = conormalize(d);
    FilteredComplex f(c.cx, full_window(c.cx));
    SpectralSequence ss(f);
    for (int s = 0; s <= 5; ++s) {
        auto h = homology(column_complex(c.cx, s));
        for (int t = 0; t <= 4; ++t) {
            std::size_t expect = h.count(t) ? h.at(t).dim : 0;
            try {
                CHECK(ss.entry(1, s, t).dim == expect);
            } catch (const std::out_of_range&) {
                // window cannot certify this cell; nothing to check
            }
        }
    }
}

TEST_CASE("page differentials compose to zero") {
    Cosimplicial d = universal_example(2, 1, 1, 5);
    OrbitConorm oc = orbit_conorm(d, 5);
    FilteredComplex f(oc.cx, full_window(oc.cx));
    SpectralSequence ss(f);
    for (int r = 1; r <= 2; ++r)
        for (int s = 0; s <= 4; ++s)
            for (int t = 0; t <= 5; ++t) {
                try {
                    F2Matrix d1 = ss.differential(r, s, t);
                    F2Matrix d2 = ss.differential(r, s + r, t + r - 1);
                    CHECK((d2 * d1).is_zero());
                } catch (const std::out_of_range&) {
                }
            }
}

TEST_CASE("narrow windows are rejected") {
    Bicomplex b = two_cell();
    FilteredComplex narrow(b, Window{0, 0, 0, 0});
    SpectralSequence ss(narrow);
    CHECK_THROWS_AS(ss.entry(1, 0, 0), std::out_of_range);
}

TEST_CASE("two-cell pages, coordinates and death pages") {
    Bicomplex b = two_cell();
    FilteredComplex f(b, Window{0, 1, -2, 1});
    SpectralSequence ss(f);
    CHECK(ss.entry(1, 0, 0).dim == 1);
    CHECK(ss.entry(1, 1, 0).dim == 1);
    CHECK(rank(ss.differential(1, 0, 0)) == 1);
    CHECK(ss.entry(2, 0, 0).dim == 0);
    CHECK(ss.entry(2, 1, 0).dim == 0);

    F2Vec x(f.ambient_dim(0));
    x.set(0);
    auto cx = ss.class_coords(1, 0, 0, x);
    REQUIRE(cx.has_value());
    CHECK(cx->popcount() == 1);
    CHECK_FALSE(ss.class_coords(2, 0, 0, x).has_value());

    // x never reaches page 2: its d^1 is nonzero
    CHECK(ss.death_page(x, 0, 0, 1, 3) == -2);
    // y is hit by that differential and dies on page 2
    F2Vec y(f.ambient_dim(-1));
    y.set(f.filtration_start(-1, 1));
    CHECK(ss.death_page(y, 1, 0, 1, 3) == 2);
    // the zero class is already dead
    CHECK(ss.death_page(F2Vec(f.ambient_dim(0)), 0, 0, 1, 3) == 1);
}

TEST_CASE("pages are invariant under enlarging the window") {
    Cosimplicial d = universal_example(2, 1, 1, 5);
    OrbitConorm oc = orbit_conorm(d, 5);
    Window w = full_window(oc.cx);
    Window big = w;
    big.plo -= 2;
    big.nlo -= 2;
    big.nhi += 2;
    FilteredComplex f1(oc.cx, w), f2(oc.cx, big);
    SpectralSequence s1(f1), s2(f2);
    for (int r = 1; r <= 3; ++r)
        for (int s = 0; s <= 4; ++s)
            for (int t = 1; t <= 4; ++t) {
                std::size_t a, bdim;
                try {
                    a = s1.entry(r, s, t).dim;
                } catch (const std::out_of_range&) {
                    continue;
                }
                bdim = s2.entry(r, s, t).dim;
                CHECK(a == bdim);
            }
}

TEST_CASE("the identity induces the identity on every page") {
    Cosimplicial d = universal_example(2, 1, 1, 4);
    Conormalization c = conormalize(d);
    BicomplexMap id;
    for (auto& [pq, labels] : c.cx.basis)
        if (!labels.empty()) id.blocks[pq] = F2Matrix::identity(labels.size());
    FilteredComplex f(c.cx, full_window(c.cx));
    SpectralSequence sa(f), sb(f);
    for (int r = 1; r <= 2; ++r)
        for (int s = 0; s <= 4; ++s)
            for (int t = 0; t <= 3; ++t) {
                try {
                    F2Matrix m = induced_page_map(id, sa, sb, r, s, t);
                    CHECK(m == F2Matrix::identity(sa.entry(r, s, t).dim));
                } catch (const std::out_of_range&) {
                }
            }
}

TEST_CASE("column reduction preserves every page and differential rank") {
    Cosimplicial d = universal_example(2, 1, 1, 5);
    OrbitConorm oc = orbit_conorm(d, 6);
    FilteredComplex fc(oc.cx, full_window(oc.cx));
    SpectralSequence ss(fc);
    ReducedFiltration rf = reduce_by_columns(oc.cx);
    FilteredComplex rfc(rf.shell, full_window(oc.cx), rf.extra);
    SpectralSequence rss(rfc);
    for (int r = 1; r <= 5; ++r)
        for (int p = 0; p <= 6; ++p)
            for (int q = -1; q <= 8; ++q) {
                std::size_t a;
                try {
                    a = ss.entry(r, p, q).dim;
                } catch (const std::out_of_range&) {
                    continue;
                }
                CHECK(a == rss.entry(r, p, q).dim);
                if (a && r <= 4)
                    CHECK(rank(ss.differential(r, p, q)) == rank(rss.differential(r, p, q)));
            }
}
