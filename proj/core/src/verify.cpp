#include "specseq/verify.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

#include "specseq/chain.hpp"
#include "specseq/horbit.hpp"
#include "specseq/injection.hpp"
#include "specseq/operations.hpp"

namespace specseq {

namespace {

std::string at(int p, int q) {
    return "(-" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::uint64_t full_mask(int p) {
    return (p >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (p + 1)) - 1);
}

/// Strict covering pairs a < b of based injections [k] -> [p] whose images
/// jointly cover [0..p].
int covering_pairs_strict(int p, int k) {
    auto v = based_injections(p, k);
    std::uint64_t full = full_mask(p);
    int c = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if ((v[i].mask | v[j].mask) == full) ++c;
    return c;
}

/// Covering pairs (a, b) with a a based [k1]-injection and b a based
/// [k2]-injection into [p] (ordered; the factors live in different degrees).
int covering_pairs_cross(int p, int k1, int k2) {
    auto va = based_injections(p, k1);
    auto vb = based_injections(p, k2);
    std::uint64_t full = full_mask(p);
    int c = 0;
    for (auto& a : va)
        for (auto& b : vb)
            if ((a.mask | b.mask) == full) ++c;
    return c;
}

/// Closed-form dimension of the first page of the orbit spectral sequence of
/// the universal example at column p, internal degree q (weight-generator
/// families truncated implicitly by the caller's degree range).
int expected_e1(int r, int s, int t, int p, int q) {
    int e = 0;
    if (p == s && q >= 2 * t) ++e;
    if (q == 2 * t) e += covering_pairs_strict(p, s);
    if (r != kInfRank) {
        if (p == s + r && q >= 2 * t + 2 * r - 2) ++e;
        if (q == 2 * t + r - 1) e += covering_pairs_cross(p, s, s + r);
        if (q == 2 * t + 2 * r - 2) e += covering_pairs_strict(p, s + r);
    }
    return e;
}

/// Second page of the same spectral sequence: every entry 0 or 1.
int expected_e2(int r, int s, int t, int p, int q) {
    if (p == s && q >= 2 * t) return 1;
    if (p >= s + 1 && p <= 2 * s && q == 2 * t) return 1;
    if (r != kInfRank) {
        if (p == s + r && q >= 2 * t + 2 * r - 2) return 1;
        if (p == 2 * s + r && q == 2 * t + r - 1) return 1;
        if (p >= s + r + 1 && p <= 2 * s + 2 * r && q == 2 * t + 2 * r - 2) return 1;
    }
    return 0;
}

Window degree_window(const Bicomplex& b, int nlo, int nhi) {
    Window w = full_window(b);
    if (w.nlo < nlo) w.nlo = nlo;
    if (w.nhi > nhi) w.nhi = nhi;
    return w;
}

/// Rebuilds a pipeline over a restricted band of total degrees: everything
/// the operation evaluations touch lives in [2(t-s)-2, 2t+3].
void restrict_degrees(OrbitPipeline& op, int nlo, int nhi) {
    Window w = degree_window(op.oc.cx, nlo, nhi);
    op.fc = std::make_unique<FilteredComplex>(op.oc.cx, w);
    op.ss = std::make_unique<SpectralSequence>(*op.fc);
}

/// Orbit pipeline running on the column-reduced filtered complex: identical
/// pages from r = 1 on, at a fraction of the ambient dimension.
struct FastOrbit {
    OrbitConorm oc;
    ReducedFiltration rf;
    std::unique_ptr<FilteredComplex> fc;
    std::unique_ptr<SpectralSequence> ss;
    FastOrbit(const Cosimplicial& y, int wcap)
        : oc(orbit_conorm(y, wcap)), rf(reduce_by_columns(oc.cx)) {
        fc = std::make_unique<FilteredComplex>(rf.shell, full_window(rf.shell), rf.extra);
        ss = std::make_unique<SpectralSequence>(*fc);
    }
};

/// Vertical (levelwise) homology dimensions of one column of a bicomplex.
std::map<int, int> column_homology(const Bicomplex& b, int p) {
    ChainComplex c;
    for (auto& [pq, labels] : b.basis) {
        if (pq.first != p || labels.empty()) continue;
        c.basis[pq.second] = labels;
    }
    for (auto& [q, labels] : c.basis)
        if (c.basis.count(q - 1)) c.diff[q] = b.vertical(p, q);
    std::map<int, int> out;
    for (auto& [q, h] : homology(c)) out[q] = (int)h.dim;
    return out;
}

// ---------------------------------------------------------------- suites --

void suite_skeleton(VerifyReport& rep) {
    for (int p = 0; p <= 6; ++p) {
        ChainComplex full = delta_chains(p);
        for (int t = 0; t <= p; ++t) {
            auto h = homology(skeleton(full, t));
            auto dim = [&](int k) {
                auto it = h.find(k);
                return it == h.end() ? 0 : (int)it->second.dim;
            };
            for (int k = 0; k <= p; ++k) {
                int expect = 0;
                if (k == t && t > 0)
                    expect = (int)binomial(p, t + 1);
                else if (k == t && t == 0)
                    expect = p + 1;
                else if (k == 0 && t > 0)
                    expect = 1;
                rep.check(dim(k) == expect, "H_" + std::to_string(k) + "(sk_" +
                                                std::to_string(t) + " of simplex " +
                                                std::to_string(p) + ") = " +
                                                std::to_string(dim(k)) + ", expected " +
                                                std::to_string(expect));
            }
        }
    }
}

void suite_univexample(VerifyReport& rep) {
    for (int r = 2; r <= 4; ++r)
        for (int s = 0; s <= 2; ++s)
            for (int t = s; t <= 3; ++t) {
                Cosimplicial d = universal_example(r, s, t);
                HostPipeline hp(std::move(d));
                int cap = hp.y.cap;
                int qmax = t + r + 2;
                for (int j = 1; j <= r + 1; ++j)
                    for (int p = 0; p <= cap; ++p)
                        for (int q = 0; q <= qmax; ++q) {
                            int expect = (j <= r && ((p == s && q == t) ||
                                                     (p == s + r && q == t + r - 1)))
                                             ? 1
                                             : 0;
                            std::size_t got;
                            try {
                                got = hp.ss->entry(j, p, q).dim;
                            } catch (const std::out_of_range&) {
                                rep.check(expect == 0, "window failed to certify the K at " +
                                                           at(p, q) + " page " +
                                                           std::to_string(j));
                                continue;
                            }
                            rep.check((int)got == expect,
                                      "universal (" + std::to_string(r) + "," +
                                          std::to_string(s) + "," + std::to_string(t) +
                                          ") page " + std::to_string(j) + " at " + at(p, q) +
                                          ": dim " + std::to_string(got) + ", expected " +
                                          std::to_string(expect));
                        }
            }
    // Unbounded-weight examples: the total complex has a single class in
    // total degree t - s.
    for (int s = 0; s <= 2; ++s)
        for (int t = s; t <= 3; ++t) {
            Cosimplicial d = universal_example(kInfRank, s, t, 2 * s + 6);
            Conormalization cd = conormalize(d);
            FilteredComplex fc(cd.cx, full_window(cd.cx));
            int n = t - s;
            auto hdim = [&](int k) {
                F2Matrix z = kernel_basis(fc.boundary(k));
                return (int)z.rows() - (int)rank(fc.boundary(k + 1));
            };
            rep.check(hdim(n) == 1, "Tot of unbounded (" + std::to_string(s) + "," +
                                        std::to_string(t) + "): H_" + std::to_string(n) +
                                        " != K");
            rep.check(hdim(n - 1) == 0, "Tot of unbounded (" + std::to_string(s) + "," +
                                            std::to_string(t) + "): H_" +
                                            std::to_string(n - 1) + " != 0");
        }
}

const std::vector<std::array<int, 3>>& five_triples() {
    static const std::vector<std::array<int, 3>> v = {
        {2, 1, 1}, {2, 2, 2}, {3, 1, 1}, {3, 2, 2}, {2, 1, 2}};
    return v;
}

void suite_e1basis(VerifyReport& rep) {
    for (auto [r, s, t] : five_triples()) {
        Cosimplicial d = universal_example(r, s, t);
        int wcap = 2 * r + 4;
        OrbitConorm oc = orbit_conorm(d, wcap);
        int qmax = wcap + 2 * t - 1;
        int pmax = std::min(d.cap, 2 * s + 2 * r);
        for (int p = 0; p <= pmax; ++p) {
            auto h = column_homology(oc.cx, p);
            for (int q = 0; q <= qmax; ++q) {
                auto it = h.find(q);
                int got = it == h.end() ? 0 : it->second;
                int expect = expected_e1(r, s, t, p, q);
                rep.check(got == expect, "E1 of orbit (" + std::to_string(r) + "," +
                                             std::to_string(s) + "," + std::to_string(t) +
                                             ") at " + at(p, q) + ": dim " +
                                             std::to_string(got) + ", expected " +
                                             std::to_string(expect));
            }
        }
    }
}

void suite_mayonethree(VerifyReport& rep) {
    for (auto [r, s, t] : {std::array<int, 3>{2, 1, 1}, std::array<int, 3>{3, 2, 2}}) {
        int cap = 5, wcap = 4;
        Cosimplicial hd = universal_homology(r, s, t, cap);
        HomotopyOrbit ho = homotopy_orbit(hd, wcap);
        MayoComplex mc = mayo_complex(hd, wcap);
        mc.cx.validate();
        int qmax = wcap + 2 * t - 1;
        for (int p = 0; p <= cap; ++p) {
            auto h = homology(ho.cx.level[p]);
            std::map<int, int> expect;
            for (auto& [pq, v] : mc.diag)
                if (pq.first == p) expect[pq.second] += (int)v.size();
            for (auto& [pq, v] : mc.off)
                if (pq.first == p) expect[pq.second] += (int)v.size();
            for (int q = 0; q <= qmax; ++q) {
                auto it = h.find(q);
                int got = it == h.end() ? 0 : (int)it->second.dim;
                auto ie = expect.find(q);
                int want = ie == expect.end() ? 0 : ie->second;
                rep.check(got == want, "orbit homology of the levelwise-homology complex (" +
                                           std::to_string(r) + "," + std::to_string(s) + "," +
                                           std::to_string(t) + ") level " + std::to_string(p) +
                                           " degree " + std::to_string(q) + ": dim " +
                                           std::to_string(got) + ", expected " +
                                           std::to_string(want));
            }
        }
    }
}

void suite_upsilon(VerifyReport& rep) {
    for (int s = 0; s <= 4; ++s)
        for (int s2 = s; s2 <= 4; ++s2) {
            int cap = s + s2 + 2;
            UpsilonComplex u = upsilon(s, s2, cap);
            auto h = cohomology(u.cpx);
            for (int p = 0; p <= cap; ++p) {
                auto it = h.find(p);
                int got = it == h.end() ? 0 : (int)it->second.dim;
                int expect = (p == s + s2) ? 1 : 0;
                rep.check(got == expect, "tensor-row cohomology (" + std::to_string(s) + "," +
                                             std::to_string(s2) + ") H^" + std::to_string(p) +
                                             " = " + std::to_string(got) + ", expected " +
                                             std::to_string(expect));
            }
        }
}

void suite_omega(VerifyReport& rep) {
    for (int s = 0; s <= 4; ++s) {
        int cap = 2 * s + 2;
        UpsilonComplex u = upsilon(s, s, cap);
        auto check_cohom = [&](const CochainComplex& c, const std::string& name,
                               std::function<int(int)> expect) {
            auto h = cohomology(c);
            for (int p = 0; p <= cap; ++p) {
                auto it = h.find(p);
                int got = it == h.end() ? 0 : (int)it->second.dim;
                rep.check(got == expect(p), name + " (s=" + std::to_string(s) + ") H^" +
                                                std::to_string(p) + " = " +
                                                std::to_string(got) + ", expected " +
                                                std::to_string(expect(p)));
            }
        };
        check_cohom(omega_bar(u), "unordered quotient",
                    [&](int p) { return (p >= s && p <= 2 * s) ? 1 : 0; });
        check_cohom(symmetrized_subcomplex(u), "symmetrized subcomplex",
                    [&](int p) { return (s > 0 && p >= s + 1 && p <= 2 * s) ? 1 : 0; });
        check_cohom(invariant_subcomplex(u), "invariant subcomplex", [&](int p) {
            if (s == 0) return p == 0 ? 1 : 0;
            return (s > 1 && p >= s + 2 && p <= 2 * s) ? 1 : 0;
        });
        if (s >= 2) {
            // The inclusion of the symmetrized subcomplex induces the zero
            // map on top cohomology.
            int p = 2 * s;
            int n = u.cpx.dim(p);
            F2Matrix op = F2Matrix::identity(n) + u.swap(p);
            RankProfile rp = rank_profile(op);
            F2Matrix arows(rp.rank, n);
            for (std::size_t i = 0; i < rp.rank; ++i) arows.set_row(i, rp.reduced.row(i));
            // coboundaries inside the subcomplex at top degree
            int n1 = u.cpx.dim(p - 1);
            F2Matrix op1 = F2Matrix::identity(n1) + u.swap(p - 1);
            RankProfile rp1 = rank_profile(op1);
            F2Matrix du = u.cpx.d(p - 1);
            std::vector<F2Vec> brows;
            for (std::size_t i = 0; i < rp1.rank; ++i) brows.push_back(du.apply(rp1.reduced.row(i)));
            Subquotient top = subquotient(arows, F2Matrix::from_rows(brows, n));
            rep.check(top.dim == 1,
                      "top cohomology of the symmetrized subcomplex (s=" + std::to_string(s) +
                          ") has dim " + std::to_string(top.dim) + ", expected 1");
            F2Matrix dfull = u.cpx.d(p - 1);
            std::vector<F2Vec> imrows;
            for (std::size_t c = 0; c < dfull.cols(); ++c) {
                F2Vec e(dfull.cols());
                e.set(c);
                imrows.push_back(dfull.apply(e));
            }
            F2Matrix im = F2Matrix::from_rows(imrows, n);
            for (std::size_t i = 0; i < top.reps.rows(); ++i)
                rep.check(in_row_space(im, top.reps.row(i)),
                          "top class of the symmetrized subcomplex (s=" + std::to_string(s) +
                              ") does not map to zero upstairs");
        }
    }
}

void suite_e2page(VerifyReport& rep) {
    for (auto [r, s, t] : five_triples()) {
        int wcap = 2 * r + 4;
        int qmax = 2 * t + 2 * r + 1;
        int pmax = std::min(2 * (s + r) + 1, 2 * s + 2 * r);
        Cosimplicial d = universal_example(r, s, t);
        FastOrbit op(d, wcap);
        for (int p = 0; p <= pmax; ++p)
            for (int q = 0; q <= qmax; ++q) {
                int expect = expected_e2(r, s, t, p, q);
                std::size_t got;
                try {
                    got = op.ss->entry(2, p, q).dim;
                } catch (const std::out_of_range&) {
                    rep.check(expect == 0,
                              "E2 window failed at the K of " + at(p, q));
                    continue;
                }
                rep.check((int)got == expect,
                          "E2 of orbit (" + std::to_string(r) + "," + std::to_string(s) + "," +
                              std::to_string(t) + ") at " + at(p, q) + ": dim " +
                              std::to_string(got) + ", expected " + std::to_string(expect));
            }
    }
    // degenerate universal example: second page identically zero
    for (auto [s, t] : {std::pair<int, int>{1, 1}, std::pair<int, int>{1, 2}}) {
        Cosimplicial d = universal_example(1, s, t);
        int wcap = 5;
        FastOrbit op(d, wcap);
        int qmax = wcap + 2 * t - 1;
        for (int p = 0; p <= 2 * s + 2; ++p)
            for (int q = 0; q <= qmax; ++q) {
                std::size_t got;
                try {
                    got = op.ss->entry(2, p, q).dim;
                } catch (const std::out_of_range&) {
                    continue;
                }
                rep.check(got == 0, "degenerate orbit (1," + std::to_string(s) + "," +
                                        std::to_string(t) + ") E2 at " + at(p, q) +
                                        " nonzero");
            }
    }
}

void suite_differentials(VerifyReport& rep) {
    for (auto [r, s, t] :
         {std::array<int, 3>{2, 1, 1}, std::array<int, 3>{2, 2, 2}, std::array<int, 3>{3, 2, 2}}) {
        std::string tag =
            "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ") ";
        int wcap = 2 * r + 4;
        int qmax = 2 * t + 2 * r + 1;
        int pmax = 2 * s + 2 * r;
        Cosimplicial d = universal_example(r, s, t);
        FastOrbit op(d, wcap);
        SpectralSequence& ss = *op.ss;
        auto rk = [&](int j, int p, int q) { return (int)rank(ss.differential(j, p, q)); };
        auto dim = [&](int j, int p, int q) { return (int)ss.entry(j, p, q).dim; };

        rep.check(rk(r, 2 * s + r, 2 * t + r - 1) == 1, tag + "crossing differential not rank 1");
        for (int sp = s + 1; sp <= 2 * s; ++sp)
            rep.check(rk(2 * r - 1, sp, 2 * t) == 1,
                      tag + "long differential from column " + std::to_string(sp) +
                          " not rank 1");
        for (int b = 0; b <= r - 2; ++b)
            rep.check(rk(2 * r - 1 - b, s, 2 * t + b) == 1,
                      tag + "edge differential at weight " + std::to_string(b) + " not rank 1");
        for (int b = r - 1; b <= r + 1; ++b)
            rep.check(rk(r, s, 2 * t + b) == 1,
                      tag + "column differential at weight " + std::to_string(b) +
                          " not rank 1");

        auto dies_at = [&](int page, int p, int q) {
            rep.check(dim(page - 1, p, q) == 1,
                      tag + "entry " + at(p, q) + " not K on page " + std::to_string(page - 1));
            rep.check(dim(page, p, q) == 0,
                      tag + "entry " + at(p, q) + " not 0 on page " + std::to_string(page));
        };
        for (int sp = s; sp <= 2 * s; ++sp) dies_at(2 * r, sp, 2 * t);
        for (int v = 2 * t + 1; v <= 2 * t + r - 1; ++v) dies_at(2 * t + 2 * r - v, s, v);
        for (int q = 2 * t + r; q <= qmax - 1; ++q) dies_at(r + 1, s, q);
        dies_at(r + 1, 2 * s + 2 * r, 2 * t + 2 * r - 2);
        for (int sp = s + 2 * r - 1; sp <= 2 * s + 2 * r - 1; ++sp)
            dies_at(2 * r, sp, 2 * t + 2 * r - 2);
        for (int sp = s + r; sp <= s + 2 * r - 2; ++sp)
            dies_at(sp - s + 1, sp, 2 * t + 2 * r - 2);
        for (int q = 2 * t + 2 * r - 1; q <= qmax - 1; ++q) dies_at(r + 1, s + r, q);
        dies_at(r + 1, 2 * s + r, 2 * t + r - 1);

        for (int p = 0; p <= pmax; ++p)
            for (int q = 0; q <= qmax - 2; ++q) {
                std::size_t got;
                try {
                    got = ss.entry(2 * r, p, q).dim;
                } catch (const std::out_of_range&) {
                    continue;
                }
                rep.check(got == 0,
                          tag + "page " + std::to_string(2 * r) + " nonzero at " + at(p, q));
            }
    }
}

void suite_einf(VerifyReport& rep) {
    // collapse of the orbit spectral sequence: page 2r vanishes on the window
    {
        int r = 2, s = 1, t = 1, wcap = 2 * r + 4;
        Cosimplicial d = universal_example(r, s, t);
        FastOrbit op(d, wcap);
        int qmax = wcap + 2 * t - 3;
        for (int p = 0; p <= 2 * s + 2 * r; ++p)
            for (int q = 0; q <= qmax; ++q) {
                std::size_t got;
                try {
                    got = op.ss->entry(2 * r, p, q).dim;
                } catch (const std::out_of_range&) {
                    continue;
                }
                rep.check(got == 0, "(2,1,1) orbit page 4 nonzero at " + at(p, q));
            }
    }
    // the tensor square of the finite universal example is acyclic
    {
        Cosimplicial d = universal_example(2, 1, 1);
        Conormalization c = conormalize(d);
        BicomplexTensor tb = tensor_bicomplex(c.cx, c.cx);
        int nlo = 0, nhi = -1;
        bool any = false;
        for (auto& [pq, l] : tb.cx.basis)
            if (!l.empty()) {
                int n = pq.second - pq.first;
                if (!any) {
                    nlo = nhi = n;
                    any = true;
                } else {
                    nlo = std::min(nlo, n);
                    nhi = std::max(nhi, n);
                }
            }
        ChainComplex tot =
            total_complex(tb.cx, tb.cx.min_col(), tb.cx.max_col(), nlo - 1, nhi + 1);
        for (auto& [k, e] : homology(tot))
            rep.check(e.dim == 0, "total complex of the tensor square has homology in degree " +
                                      std::to_string(k));
    }
    // the unbounded-rank universal example totalizes to a single K in the
    // interior of the degree window
    for (auto [s, t] : {std::pair<int, int>{1, 1}, std::pair<int, int>{1, 2}}) {
        int cap = s + 6;
        Cosimplicial d = universal_example(kInfRank, s, t, cap);
        Conormalization c = conormalize(d);
        ChainComplex tot = total_complex(c.cx, 0, cap, t - s - 2, t - s + 2);
        auto h = homology(tot);
        for (int k = t - s - 1; k <= t - s + 1; ++k) {
            auto it = h.find(k);
            int got = it == h.end() ? 0 : (int)it->second.dim;
            int expect = (k == t - s) ? 1 : 0;
            rep.check(got == expect, "unbounded example (s=" + std::to_string(s) + ",t=" +
                                         std::to_string(t) + ") total homology in degree " +
                                         std::to_string(k) + " is " + std::to_string(got) +
                                         ", expected " + std::to_string(expect));
        }
    }
}

void suite_product(VerifyReport& rep, unsigned seed) {
    // shuffle ∘ AW = identity on the tensor of conormalizations
    {
        auto run_pair = [&](Cosimplicial x, Cosimplicial y, const std::string& name) {
            Conormalization cx = conormalize(x), cy = conormalize(y);
            BicomplexTensor tb = tensor_bicomplex(cx.cx, cy.cx);
            TensorConorm tc = conormalized_tensor(x, y);
            BicomplexMap aw = alexander_whitney(x, y, cx, cy, tb, tc);
            BicomplexMap sh = shuffle(x, y, cx, cy, tb, tc);
            int capmin = std::min(x.cap, y.cap);
            BicomplexMap comp = compose(sh, aw, tb.cx, tc.cx, tb.cx);
            bool ok = true;
            for (auto& [pq, labels] : tb.cx.basis) {
                if (labels.empty() || pq.first > capmin) continue;
                if (!(comp.at(pq.first, pq.second, tb.cx, tb.cx) ==
                      F2Matrix::identity(labels.size())))
                    ok = false;
            }
            rep.check(ok, "shuffle after AW is not the identity for " + name);
        };
        run_pair(universal_example(2, 1, 1, 4), universal_example(2, 0, 0, 4), "mixed pair");
        run_pair(universal_example(2, 1, 1, 4), universal_example(2, 1, 1, 4), "square pair");
    }
    // product of the fundamental classes is nonzero
    for (auto [r, s, t] : {std::array<int, 3>{2, 1, 1}, std::array<int, 3>{2, 1, 2}}) {
        Cosimplicial d = universal_example(r, s, t);
        HostPipeline hp(d);
        OrbitPipeline oy(d, 5);
        restrict_degrees(oy, 2 * (t - s) - 2, 2 * t + 3);
        RCycle i = iota(r, s, t, hp.cy);
        OpResult res = external_product(i, i, hp.y, hp.cy, oy);
        rep.check(!res.zero, "product of fundamental classes vanishes for (" +
                                 std::to_string(r) + "," + std::to_string(s) + "," +
                                 std::to_string(t) + ")");
    }
    // commutativity on sampled cycles
    {
        std::mt19937 rng(seed * 2654435761u + 17u);
        Cosimplicial d = universal_example(2, 1, 1);
        HostPipeline hp(d);
        OrbitPipeline oy(d, 5);
        restrict_degrees(oy, -2, 5);
        for (int it = 0; it < 6; ++it) {
            RCycle x = random_rcycle(*hp.ss, *hp.fc, 2, 1, 1, rng);
            RCycle y = random_rcycle(*hp.ss, *hp.fc, 2, 1, 1, rng);
            OpResult a = external_product(x, y, hp.y, hp.cy, oy);
            OpResult b = external_product(y, x, hp.y, hp.cy, oy);
            rep.check(a.coords == b.coords, "product not commutative on sample " +
                                                std::to_string(it));
        }
    }
}

void suite_operations(VerifyReport& rep, unsigned seed) {
    std::mt19937 rng(seed * 0x9e3779b9u + 101u);
    const int r = 2, s = 1, t = 1;
    std::vector<std::pair<std::string, Cosimplicial>> hosts;
    hosts.emplace_back("plain", universal_example(2, 1, 1));
    hosts.emplace_back("double",
                       direct_sum(universal_example(2, 1, 1), universal_example(2, 1, 1)));
    hosts.emplace_back("padded",
                       direct_sum(universal_example(2, 1, 1), universal_example(1, 1, 1, 7)));
    for (auto& [name, host] : hosts) {
        HostPipeline hp(host);
        OrbitPipeline oy(host, 5);
        restrict_degrees(oy, 2 * (t - s) - 2, 2 * t + 3);
        std::vector<RCycle> cyc;
        for (int it = 0; it < 7; ++it)
            cyc.push_back(random_rcycle(*hp.ss, *hp.fc, r, s, t, rng));
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            ExternalOpCtx ctx(host, hp.cy, oy, cyc[i]);
            OpResult diag = ctx.horizontal(t - s);
            OpResult prod = external_product(cyc[i], cyc[i], host, hp.cy, oy);
            rep.check(diag.coords == prod.coords,
                      name + ": bottom operation disagrees with the squared product on sample " +
                          std::to_string(i));
        }
        // additivity for m above the bottom
        for (int it = 0; it < 3; ++it) {
            RCycle x = cyc[2 * it], y = cyc[2 * it + 1];
            RCycle z = x;
            z.comp.clear();
            for (auto& [p, v] : x.comp) z.comp[p] = v;
            for (auto& [p, v] : y.comp) {
                auto f = z.comp.find(p);
                if (f == z.comp.end())
                    z.comp[p] = v;
                else
                    f->second ^= v;
            }
            for (auto& [p, v] : std::map<int, F2Vec>(z.comp))
                if (v.is_zero()) z.comp.erase(p);
            ExternalOpCtx cx(host, hp.cy, oy, x), cyv(host, hp.cy, oy, y),
                cz(host, hp.cy, oy, z);
            for (int m : {t, t + 1})
                rep.check((cx.vertical(m).coords ^ cyv.vertical(m).coords) ==
                              cz.vertical(m).coords,
                          name + ": vertical operation m=" + std::to_string(m) +
                              " not additive on sample " + std::to_string(it));
            for (int m : {t - s, t})
                rep.check((cx.horizontal(m).coords ^ cyv.horizontal(m).coords) ==
                              cz.horizontal(m).coords,
                          name + ": horizontal operation m=" + std::to_string(m) +
                              " not additive on sample " + std::to_string(it));
        }
        // vanishing on lower filtration
        for (int it = 0; it < 3; ++it) {
            RCycle z = random_rcycle(*hp.ss, *hp.fc, r - 1, s + 1, t + 1, rng);
            z.r = r;
            z.s = s;
            z.t = t;
            ExternalOpCtx ctx(host, hp.cy, oy, z);
            rep.check(ctx.vertical(t).zero && ctx.vertical(t + 1).zero,
                      name + ": vertical operation nonzero on lower filtration, sample " +
                          std::to_string(it));
            rep.check(ctx.horizontal(t - s).zero && ctx.horizontal(t).zero,
                      name + ": horizontal operation nonzero on lower filtration, sample " +
                          std::to_string(it));
        }
        // vanishing on boundaries from inside the filtration
        for (int it = 0; it < 3; ++it) {
            int n = t - s + 1;
            int dimn = hp.fc->ambient_dim(n);
            int start = hp.fc->filtration_start(n, s);
            F2Vec v(dimn);
            for (int i = start; i < dimn; ++i)
                if (rng() & 1) v.set(i);
            F2Vec b = hp.fc->boundary(n).apply(v);
            RCycle z = rcycle_from_ambient(b, r, s, t, *hp.fc);
            ExternalOpCtx ctx(host, hp.cy, oy, z);
            rep.check(ctx.vertical(t).zero && ctx.vertical(t + 1).zero,
                      name + ": vertical operation nonzero on a filtration boundary, sample " +
                          std::to_string(it));
            rep.check(ctx.horizontal(t - s).zero && ctx.horizontal(t).zero,
                      name +
                          ": horizontal operation nonzero on a filtration boundary, sample " +
                          std::to_string(it));
        }
    }
}

void suite_welldefined(VerifyReport& rep, unsigned seed) {
    std::mt19937 rng(seed * 69069u + 7u);
    // r = 2: every operation kills boundaries outright (w = r = 2)
    {
        const int r = 2, s = 1, t = 1;
        Cosimplicial host = universal_example(2, 1, 1);
        HostPipeline hp(host);
        OrbitPipeline oy(host, 5);
        restrict_degrees(oy, 2 * (t - s) - 2, 2 * t + 3);
        for (int it = 0; it < 3; ++it) {
            RCycle z = random_rcycle(*hp.ss, *hp.fc, r - 1, s - r + 1, t - r + 2, rng);
            F2Vec amb = rcycle_ambient(z, *hp.fc);
            F2Vec b = hp.fc->boundary(t - s + 1).apply(amb);
            RCycle dz = rcycle_from_ambient(b, r, s, t, *hp.fc);
            ExternalOpCtx ctx(host, hp.cy, oy, dz);
            for (int m = t - s; m <= t; ++m)
                rep.check(ctx.horizontal(m).zero,
                          "page-2 horizontal operation m=" + std::to_string(m) +
                              " nonzero on a boundary, sample " + std::to_string(it));
            rep.check(ctx.vertical(t).zero,
                      "page-2 vertical operation nonzero on a boundary, sample " +
                          std::to_string(it));
        }
    }
    // r = 3 at (s,t) = (2,2): boundaries die no later than page w(m)
    {
        const int r = 3, s = 2, t = 2;
        Cosimplicial host = universal_example(2, 0, 1, 2 * (s + r) + 1);
        HostPipeline hp(host);
        OrbitPipeline oy(host, 6);
        restrict_degrees(oy, 2 * (t - s) - 2, 2 * t + 3);
        for (int it = 0; it < 2; ++it) {
            RCycle z = random_rcycle(*hp.ss, *hp.fc, r - 1, s - r + 1, t - r + 2, rng);
            F2Vec amb = rcycle_ambient(z, *hp.fc);
            F2Vec b = hp.fc->boundary(t - s + 1).apply(amb);
            RCycle dz = rcycle_from_ambient(b, r, s, t, *hp.fc);
            ExternalOpCtx ctx(host, hp.cy, oy, dz);
            rep.check(ctx.horizontal(t - s).zero,
                      "bottom horizontal operation nonzero on a boundary, sample " +
                          std::to_string(it));
            for (int m = t - s + 1; m <= t; ++m) {
                int wp = w_page(r, s, t, m);
                OpResult res = ctx.horizontal(m);
                if (res.zero) {
                    rep.check(true, "");
                    continue;
                }
                int dp = oy.ss->death_page(res.rep, s + t - m, 2 * t, r, wp);
                rep.check(dp >= r && dp <= wp,
                          "horizontal operation m=" + std::to_string(m) +
                              " on a boundary survives past page " + std::to_string(wp) +
                              " (death code " + std::to_string(dp) + "), sample " +
                              std::to_string(it));
            }
            rep.check(ctx.vertical(t).zero && ctx.vertical(t + 1).zero,
                      "page-3 vertical operation nonzero on a boundary, sample " +
                          std::to_string(it));
        }
    }
}

void suite_sharpness(VerifyReport& rep) {
    const int r = 3, s = 2, t = 2;
    Cosimplicial host = universal_example(r - 1, s + 1 - r, t - r + 2, 2 * (s + r) + 1);
    HostPipeline hp(host);
    OrbitPipeline oy(host, 6);
    restrict_degrees(oy, 2 * (t - s) - 2, 2 * t + 3);
    RCycle i = iota(r - 1, s + 1 - r, t - r + 2, hp.cy);
    F2Vec amb = rcycle_ambient(i, *hp.fc);
    F2Vec b = hp.fc->boundary(t - s + 1).apply(amb);
    RCycle di = rcycle_from_ambient(b, r, s, t, *hp.fc);
    ExternalOpCtx ctx(host, hp.cy, oy, di);
    for (int m = t - s + 1; m <= t; ++m) {
        int wp = w_page(r, s, t, m);
        OpResult res = ctx.horizontal(m);
        // the value must be nonzero on page w-1 and die exactly on page w
        auto prev = oy.ss->class_coords(wp - 1, s + t - m, 2 * t, res.rep);
        rep.check(prev && !prev->is_zero(),
                  "boundary image for m=" + std::to_string(m) + " already zero on page " +
                      std::to_string(wp - 1));
        int dp = oy.ss->death_page(res.rep, s + t - m, 2 * t, 2, wp);
        rep.check(dp == wp, "boundary image for m=" + std::to_string(m) + " dies on page " +
                                std::to_string(dp) + ", expected exactly " +
                                std::to_string(wp));
    }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "skeleton", "univexample", "e1basis",       "mayonethree", "upsilon",
        "omega",    "e2page",      "differentials", "einf",        "product",
        "operations", "welldefined", "sharpness"};
    return names;
}

VerifyReport run_verify_suite(const std::string& suite, unsigned seed) {
    if (suite == "all") {
        VerifyReport all;
        all.suite = "all";
        for (auto& n : verify_suite_names()) all.merge(run_verify_suite(n, seed));
        return all;
    }
    VerifyReport rep;
    rep.suite = suite;
    if (suite == "skeleton")
        suite_skeleton(rep);
    else if (suite == "univexample")
        suite_univexample(rep);
    else if (suite == "e1basis")
        suite_e1basis(rep);
    else if (suite == "mayonethree")
        suite_mayonethree(rep);
    else if (suite == "upsilon")
        suite_upsilon(rep);
    else if (suite == "omega")
        suite_omega(rep);
    else if (suite == "e2page")
        suite_e2page(rep);
    else if (suite == "differentials")
        suite_differentials(rep);
    else if (suite == "einf")
        suite_einf(rep);
    else if (suite == "product")
        suite_product(rep, seed);
    else if (suite == "operations")
        suite_operations(rep, seed);
    else if (suite == "welldefined")
        suite_welldefined(rep, seed);
    else if (suite == "sharpness")
        suite_sharpness(rep);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    return rep;
}

}  // namespace specseq
