// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "specseq/operations.hpp"
#include "specseq/verify.hpp"

using namespace specseq;

namespace {

struct Criterion {
    int id;
    std::string name;
    double limit_s;  // <= 0: no stated limit
    std::function<VerifyReport()> run;
};

VerifyReport suites(std::initializer_list<const char*> names) {
    VerifyReport rep;
    rep.suite = "acceptance";
    for (const char* n : names) rep.merge(run_verify_suite(n, 20260825));
    return rep;
}

// Independent rank oracle: row elimination on plain machine words.
std::size_t oracle_rank(std::vector<std::uint32_t> rows) {
    std::size_t r = 0;
    for (int bit = 31; bit >= 0; --bit) {
        std::size_t piv = r;
        while (piv < rows.size() && !(rows[piv] >> bit & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] >> bit & 1)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

VerifyReport property_suites() {
    VerifyReport rep;
    rep.suite = "properties";

    // locality: enlarging the window never changes a certified entry
    {
        Cosimplicial y = universal_example(2, 1, 1, 5);
        OrbitConorm oc = orbit_conorm(y, 5);
        Window w = full_window(oc.cx);
        Window big{w.plo - 2, w.phi, w.nlo - 2, w.nhi + 2};
        FilteredComplex f1(oc.cx, w), f2(oc.cx, big);
        SpectralSequence s1(f1), s2(f2);
        for (int r = 1; r <= 3; ++r)
            for (int s = 0; s <= 5; ++s)
                for (int t = 0; t <= 5; ++t) {
                    std::size_t a;
                    try {
                        a = s1.entry(r, s, t).dim;
                    } catch (const std::out_of_range&) {
                        continue;
                    }
                    rep.check(a == s2.entry(r, s, t).dim,
                              "window enlargement changed E^" + std::to_string(r) + "(-" +
                                  std::to_string(s) + "," + std::to_string(t) + ")");
                }
    }

    // doubling the weight cap leaves entries below the truncation unchanged
    {
        Cosimplicial y = universal_example(2, 1, 1, 5);
        int wcap = 4, t = 1;
        OrbitConorm oa = orbit_conorm(y, wcap), ob = orbit_conorm(y, 2 * wcap);
        FilteredComplex fa(oa.cx, full_window(oa.cx)), fb(ob.cx, full_window(ob.cx));
        SpectralSequence sa(fa), sb(fb);
        for (int r = 1; r <= 3; ++r)
            for (int p = 0; p <= 4; ++p)
                for (int q = 0; q <= wcap + 2 * t - 3; ++q) {
                    std::size_t a, b;
                    try {
                        a = sa.entry(r, p, q).dim;
                        b = sb.entry(r, p, q).dim;
                    } catch (const std::out_of_range&) {
                        continue;
                    }
                    rep.check(a == b, "weight-cap doubling changed E^" + std::to_string(r) +
                                          "(-" + std::to_string(p) + "," + std::to_string(q) +
                                          ")");
                }
    }

    // d^r following d^r is zero everywhere it is defined
    for (auto [r0, s0, t0] : {std::array<int, 3>{2, 1, 1}, std::array<int, 3>{2, 0, 1}}) {
        Cosimplicial y = universal_example(r0, s0, t0, 5);
        OrbitConorm oc = orbit_conorm(y, 5);
        FilteredComplex f(oc.cx, full_window(oc.cx));
        SpectralSequence ss(f);
        for (int r = 1; r <= 3; ++r)
            for (int s = 0; s <= 5; ++s)
                for (int t = 0; t <= 6; ++t) {
                    try {
                        F2Matrix d1 = ss.differential(r, s, t);
                        F2Matrix d2 = ss.differential(r, s + r, t + r - 1);
                        rep.check((d2 * d1).is_zero(),
                                  "d^r composite nonzero at r=" + std::to_string(r) + " (-" +
                                      std::to_string(s) + "," + std::to_string(t) + ")");
                    } catch (const std::out_of_range&) {
                    }
                }
    }

    // randomized linear algebra against an independent elimination oracle
    {
        std::mt19937 rng(20260825);
        for (int trial = 0; trial < 150; ++trial) {
            int n = 1 + (int)(rng() % 16), m = 1 + (int)(rng() % 16);
            F2Matrix a(n, m);
            std::vector<std::uint32_t> rows(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j)
                    if (rng() & 1) {
                        a.set(i, j);
                        rows[i] |= 1u << j;
                    }
            std::size_t rk = rank(a);
            rep.check(rk == oracle_rank(rows), "rank disagrees with the oracle");
            F2Matrix k = kernel_basis(a);
            rep.check(rk + k.rows() == (std::size_t)m, "rank-nullity violated");
            bool killed = true;
            for (std::size_t i = 0; i < k.rows(); ++i)
                if (!a.apply(k.row(i)).is_zero()) killed = false;
            rep.check(killed, "kernel row not annihilated");
            rep.check(rank(a.transposed()) == rk, "row and column rank differ");
            // solve round-trip on a reachable vector
            F2Vec x(m);
            for (int j = 0; j < m; ++j)
                if (rng() & 1) x.set(j);
            F2Vec b = a.apply(x);
            auto y = solve(a, b);
            rep.check(y.has_value() && a.apply(*y) == b, "solve failed on a reachable vector");
            // subquotient dimension: span of all rows modulo the row space of a
            F2Matrix num = F2Matrix::vstack(a, F2Matrix::identity(m));
            Subquotient sq = subquotient(num, a);
            rep.check(sq.dim == (std::size_t)m - rk, "subquotient dimension mismatch");
        }
    }
    return rep;
}

}  // namespace

int main() {
    std::vector<Criterion> cs = {
        {1, "skeleton homology", 1.0, [] { return suites({"skeleton"}); }},
        {2, "universal-example pages", 5.0, [] { return suites({"univexample"}); }},
        {3, "orbit first page", 30.0, [] { return suites({"e1basis", "mayonethree"}); }},
        {4, "tensor-square cohomology", 10.0, [] { return suites({"upsilon", "omega"}); }},
        {5, "orbit second page", 60.0, [] { return suites({"e2page"}); }},
        {6, "differential pattern", 120.0, [] { return suites({"differentials", "einf"}); }},
        {7, "products and operations", 120.0, [] { return suites({"product", "operations"}); }},
        {8, "well-definedness and sharpness", 120.0,
         [] { return suites({"welldefined", "sharpness"}); }},
        {9, "property suites", 0.0, property_suites},
    };
    int failed = 0;
    for (auto& c : cs) {
        auto start = std::chrono::steady_clock::now();
        VerifyReport rep;
        std::string error;
        try {
            rep = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        bool ok = error.empty() && rep.ok() && (c.limit_s <= 0 || secs < c.limit_s);
        if (!ok) ++failed;
        std::printf("criterion %d (%s): %s [%d checks, %.2fs%s]\n", c.id, c.name.c_str(),
                    ok ? "PASS" : "FAIL", rep.cases, secs,
                    c.limit_s > 0 ? (" / limit " + std::to_string((int)c.limit_s) + "s").c_str()
                                  : "");
        if (!error.empty()) std::printf("  error: %s\n", error.c_str());
        for (auto& f : rep.failures) std::printf("  %s\n", f.c_str());
        if (c.limit_s > 0 && secs >= c.limit_s) std::printf("  over time budget\n");
    }
    return failed ? 1 : 0;
}
