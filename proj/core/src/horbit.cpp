#include "specseq/horbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace specseq {

int HomotopyOrbit::index(int p, int q, int i, int qa, int ia, int qb, int ib) const {
    auto it = idx.find({p, q});
    if (it == idx.end()) return -1;
    auto jt = it->second.find({i, qa, ia, qb, ib});
    return jt == it->second.end() ? -1 : jt->second;
}

HomotopyOrbit homotopy_orbit(const Cosimplicial& y, int wcap) {
    HomotopyOrbit h;
    h.wcap = wcap;
    h.cx.cap = y.cap;
    h.cx.level.resize(y.cap + 1);
    for (int p = 0; p <= y.cap; ++p) {
        std::set<int> qs;
        for (auto& [qa, la] : y.level[p].basis) {
            (void)la;
            for (auto& [qb, lb] : y.level[p].basis) {
                (void)lb;
                for (int i = 0; i <= wcap; ++i) qs.insert(qa + qb + i);
            }
        }
        for (int q : qs) {
            std::vector<std::string> labels;
            auto& el = h.ents[{p, q}];
            auto& im = h.idx[{p, q}];
            for (int i = 0; i <= wcap; ++i)
                for (auto& [qa, la] : y.level[p].basis) {
                    int qb = q - i - qa;
                    auto itb = y.level[p].basis.find(qb);
                    if (itb == y.level[p].basis.end()) continue;
                    for (int ia = 0; ia < (int)la.size(); ++ia)
                        for (int ib = 0; ib < (int)itb->second.size(); ++ib) {
                            im[{i, qa, ia, qb, ib}] = (int)el.size();
                            el.push_back({i, qa, ia, qb, ib});
                            labels.push_back("e" + std::to_string(i) + "|" + la[ia] + "|" +
                                             itb->second[ib]);
                        }
                }
            if (!labels.empty()) h.cx.level[p].basis[q] = std::move(labels);
        }
        // differential
        for (auto& [pq, el] : h.ents) {
            if (pq.first != p) continue;
            int q = pq.second;
            int rows = h.cx.level[p].dim(q - 1);
            if (!rows) continue;
            F2Matrix d(rows, (int)el.size());
            for (int j = 0; j < (int)el.size(); ++j) {
                auto& e = el[j];
                if (e.i > 0) {
                    d.flip(h.index(p, q - 1, e.i - 1, e.qa, e.ia, e.qb, e.ib), j);
                    d.flip(h.index(p, q - 1, e.i - 1, e.qb, e.ib, e.qa, e.ia), j);
                }
                F2Matrix bda = y.level[p].boundary(e.qa);
                for (std::size_t r = 0; r < bda.rows(); ++r)
                    if (bda.get(r, e.ia))
                        d.flip(h.index(p, q - 1, e.i, e.qa - 1, (int)r, e.qb, e.ib), j);
                F2Matrix bdb = y.level[p].boundary(e.qb);
                for (std::size_t r = 0; r < bdb.rows(); ++r)
                    if (bdb.get(r, e.ib))
                        d.flip(h.index(p, q - 1, e.i, e.qa, e.ia, e.qb - 1, (int)r), j);
            }
            h.cx.level[p].diff[q] = std::move(d);
        }
    }
    h.cx.coface.resize(y.cap);
    h.cx.codegen.resize(y.cap);
    auto structure = [&](int p, const GradedMap& fa, int ptgt) {
        GradedMap g;
        for (auto& [pq, el] : h.ents) {
            if (pq.first != p) continue;
            int q = pq.second;
            int rows = h.cx.level[ptgt].dim(q);
            F2Matrix m(rows, (int)el.size());
            for (int j = 0; j < (int)el.size(); ++j) {
                auto& e = el[j];
                F2Matrix ma = fa.at(e.qa, y.level[p], y.level[ptgt]);
                F2Matrix mb = fa.at(e.qb, y.level[p], y.level[ptgt]);
                for (std::size_t ra = 0; ra < ma.rows(); ++ra) {
                    if (!ma.get(ra, e.ia)) continue;
                    for (std::size_t rb = 0; rb < mb.rows(); ++rb)
                        if (mb.get(rb, e.ib))
                            m.flip(h.index(ptgt, q, e.i, e.qa, (int)ra, e.qb, (int)rb), j);
                }
            }
            if (rows) g.deg[q] = std::move(m);
        }
        return g;
    };
    for (int p = 0; p < y.cap; ++p) {
        h.cx.coface[p].resize(p + 2);
        h.cx.codegen[p].resize(p + 1);
        for (int i = 0; i <= p + 1; ++i) h.cx.coface[p][i] = structure(p, y.coface[p][i], p + 1);
        for (int i = 0; i <= p; ++i) h.cx.codegen[p][i] = structure(p + 1, y.codegen[p][i], p);
    }
    return h;
}

CosimplicialMap homotopy_orbit_map(const CosimplicialMap& f, const Cosimplicial& x,
                                   const Cosimplicial& y, const HomotopyOrbit& hx,
                                   const HomotopyOrbit& hy) {
    CosimplicialMap g;
    g.lvl.resize(x.cap + 1);
    for (auto& [pq, el] : hx.ents) {
        auto [p, q] = pq;
        int rows = hy.cx.level[p].dim(q);
        F2Matrix m(rows, (int)el.size());
        for (int j = 0; j < (int)el.size(); ++j) {
            auto& e = el[j];
            F2Matrix fa = f.at(p, e.qa, x, y);
            F2Matrix fb = f.at(p, e.qb, x, y);
            for (std::size_t ra = 0; ra < fa.rows(); ++ra) {
                if (!fa.get(ra, e.ia)) continue;
                for (std::size_t rb = 0; rb < fb.rows(); ++rb)
                    if (fb.get(rb, e.ib))
                        m.flip(hy.index(p, q, e.i, e.qa, (int)ra, e.qb, (int)rb), j);
            }
        }
        if (rows && !el.empty()) g.lvl[p].deg[q] = std::move(m);
    }
    return g;
}

int WTensor::index(int p, int q, int i, int flag, int qa, int ia, int qb, int ib) const {
    auto it = idx.find({p, q});
    if (it == idx.end()) return -1;
    auto jt = it->second.find({i, flag, qa, ia, qb, ib});
    return jt == it->second.end() ? -1 : jt->second;
}

WTensor w_tensor(const Cosimplicial& a, const Cosimplicial& b, int wcap) {
    WTensor w;
    w.wcap = wcap;
    w.cx.cap = a.cap;
    w.cx.level.resize(a.cap + 1);
    for (int p = 0; p <= a.cap; ++p) {
        std::set<int> qs;
        for (auto& [qa, la] : a.level[p].basis) {
            (void)la;
            for (auto& [qb, lb] : b.level[p].basis) {
                (void)lb;
                for (int i = 0; i <= wcap; ++i) qs.insert(qa + qb + i);
            }
        }
        for (int q : qs) {
            std::vector<std::string> labels;
            auto& el = w.ents[{p, q}];
            auto& im = w.idx[{p, q}];
            for (int i = 0; i <= wcap; ++i)
                for (int flag = 0; flag <= 1; ++flag)
                    for (auto& [qa, la] : a.level[p].basis) {
                        int qb = q - i - qa;
                        auto itb = b.level[p].basis.find(qb);
                        if (itb == b.level[p].basis.end()) continue;
                        for (int ia = 0; ia < (int)la.size(); ++ia)
                            for (int ib = 0; ib < (int)itb->second.size(); ++ib) {
                                im[{i, flag, qa, ia, qb, ib}] = (int)el.size();
                                el.push_back({i, flag, qa, ia, qb, ib});
                                labels.push_back((flag ? "se" : "e") + std::to_string(i) + "|" +
                                                 la[ia] + "|" + itb->second[ib]);
                            }
                    }
            if (!labels.empty()) w.cx.level[p].basis[q] = std::move(labels);
        }
        for (auto& [pq, el] : w.ents) {
            if (pq.first != p) continue;
            int q = pq.second;
            int rows = w.cx.level[p].dim(q - 1);
            if (!rows) continue;
            F2Matrix d(rows, (int)el.size());
            for (int j = 0; j < (int)el.size(); ++j) {
                auto& e = el[j];
                if (e.i > 0) {
                    d.flip(w.index(p, q - 1, e.i - 1, 0, e.qa, e.ia, e.qb, e.ib), j);
                    d.flip(w.index(p, q - 1, e.i - 1, 1, e.qa, e.ia, e.qb, e.ib), j);
                }
                F2Matrix bda = a.level[p].boundary(e.qa);
                for (std::size_t r = 0; r < bda.rows(); ++r)
                    if (bda.get(r, e.ia))
                        d.flip(w.index(p, q - 1, e.i, e.flag, e.qa - 1, (int)r, e.qb, e.ib), j);
                F2Matrix bdb = b.level[p].boundary(e.qb);
                for (std::size_t r = 0; r < bdb.rows(); ++r)
                    if (bdb.get(r, e.ib))
                        d.flip(w.index(p, q - 1, e.i, e.flag, e.qa, e.ia, e.qb - 1, (int)r), j);
            }
            w.cx.level[p].diff[q] = std::move(d);
        }
    }
    w.cx.coface.resize(a.cap);
    w.cx.codegen.resize(a.cap);
    auto structure = [&](int p, const GradedMap& fa, const GradedMap& fb, int ptgt) {
        GradedMap g;
        for (auto& [pq, el] : w.ents) {
            if (pq.first != p) continue;
            int q = pq.second;
            int rows = w.cx.level[ptgt].dim(q);
            F2Matrix m(rows, (int)el.size());
            for (int j = 0; j < (int)el.size(); ++j) {
                auto& e = el[j];
                F2Matrix ma = fa.at(e.qa, a.level[p], a.level[ptgt]);
                F2Matrix mb = fb.at(e.qb, b.level[p], b.level[ptgt]);
                for (std::size_t ra = 0; ra < ma.rows(); ++ra) {
                    if (!ma.get(ra, e.ia)) continue;
                    for (std::size_t rb = 0; rb < mb.rows(); ++rb)
                        if (mb.get(rb, e.ib))
                            m.flip(w.index(ptgt, q, e.i, e.flag, e.qa, (int)ra, e.qb, (int)rb),
                                   j);
                }
            }
            if (rows) g.deg[q] = std::move(m);
        }
        return g;
    };
    for (int p = 0; p < a.cap; ++p) {
        w.cx.coface[p].resize(p + 2);
        w.cx.codegen[p].resize(p + 1);
        for (int i = 0; i <= p + 1; ++i)
            w.cx.coface[p][i] = structure(p, a.coface[p][i], b.coface[p][i], p + 1);
        for (int i = 0; i <= p; ++i)
            w.cx.codegen[p][i] = structure(p + 1, a.codegen[p][i], b.codegen[p][i], p);
    }
    return w;
}

F2Vec q_chain(const HomotopyOrbit& ho, const Cosimplicial& y, int p, int k, int m,
              const F2Vec& c) {
    int q = m + k;
    F2Vec out(ho.cx.level[p].dim(q));
    auto sup = c.support();
    if (m - k >= 0 && m - k <= ho.wcap) {
        for (auto a : sup)
            for (auto b : sup) {
                int j = ho.index(p, q, m - k, k, (int)a, k, (int)b);
                if (j >= 0) out.flip(j);
            }
    }
    F2Vec dc = y.level[p].boundary(k).apply(c);
    if (m - k + 1 >= 0 && m - k + 1 <= ho.wcap) {
        for (auto a : sup)
            for (auto b : dc.support()) {
                int j = ho.index(p, q, m - k + 1, k, (int)a, k - 1, (int)b);
                if (j >= 0) out.flip(j);
            }
    }
    return out;
}

namespace {

struct MayoLevel {
    std::map<std::array<int, 3>, int> diag;  // (i, qa, ia) -> position
    std::map<std::array<int, 4>, int> off;   // (qa, ia, qb, ib) -> position
    std::map<int, int> dims;                 // degree -> total dim
};

}  // namespace

MayoComplex mayo_complex(const Cosimplicial& hd, int wcap) {
    for (auto& l : hd.level)
        for (auto& [q, m] : l.diff)
            if (!m.is_zero())
                throw std::invalid_argument("mayo_complex: levels must have zero differential");
    MayoComplex mc;
    mc.wcap = wcap;
    mc.cx.cap = hd.cap;
    mc.cx.level.resize(hd.cap + 1);
    std::vector<std::map<int, MayoLevel>> lay(hd.cap + 1);  // per level, per degree
    for (int p = 0; p <= hd.cap; ++p) {
        std::set<int> qs;
        for (auto& [qa, la] : hd.level[p].basis) {
            (void)la;
            for (int i = 0; i <= wcap; ++i) qs.insert(2 * qa + i);
            for (auto& [qb, lb] : hd.level[p].basis) {
                (void)lb;
                qs.insert(qa + qb);
            }
        }
        for (int q : qs) {
            std::vector<std::string> labels;
            auto& dl = mc.diag[{p, q}];
            auto& ol = mc.off[{p, q}];
            MayoLevel& L = lay[p][q];
            for (int i = 0; i <= wcap; ++i) {
                if ((q - i) % 2) continue;
                int qa = (q - i) / 2;
                auto it = hd.level[p].basis.find(qa);
                if (it == hd.level[p].basis.end()) continue;
                for (int ia = 0; ia < (int)it->second.size(); ++ia) {
                    L.diag[{i, qa, ia}] = (int)labels.size();
                    dl.push_back({i, qa, ia});
                    labels.push_back("e" + std::to_string(i) + "|" + it->second[ia] + "^2");
                }
            }
            for (auto& [qa, la] : hd.level[p].basis) {
                int qb = q - qa;
                if (qb < qa) continue;
                auto itb = hd.level[p].basis.find(qb);
                if (itb == hd.level[p].basis.end()) continue;
                for (int ia = 0; ia < (int)la.size(); ++ia) {
                    int ib0 = (qa == qb) ? ia + 1 : 0;
                    for (int ib = ib0; ib < (int)itb->second.size(); ++ib) {
                        L.off[{qa, ia, qb, ib}] = (int)labels.size();
                        ol.push_back({qa, ia, qb, ib});
                        labels.push_back("e0|" + la[ia] + "|" + itb->second[ib]);
                    }
                }
            }
            if (!labels.empty()) {
                L.dims[q] = (int)labels.size();
                mc.cx.level[p].basis[q] = std::move(labels);
            } else {
                mc.diag.erase({p, q});
                mc.off.erase({p, q});
            }
        }
    }
    // homology classes of e_i ⊗ u ⊗ v: for i > 0 only the diagonal survives
    // (the off-diagonal symmetric part bounds); for i = 0 fold onto ordered pairs.
    auto reduce_into = [&](F2Matrix& m, int col, int ptgt, int i, int qa, const F2Vec& u, int qb,
                           const F2Vec& v, int q) {
        MayoLevel& L = lay[ptgt][q];
        for (auto a : u.support())
            for (auto b : v.support()) {
                std::pair<int, int> ka{qa, (int)a}, kb{qb, (int)b};
                if (ka == kb) {
                    m.flip(L.diag.at({i, qa, (int)a}), col);
                } else if (i == 0) {
                    if (ka < kb)
                        m.flip(L.off.at({qa, (int)a, qb, (int)b}), col);
                    else
                        m.flip(L.off.at({qb, (int)b, qa, (int)a}), col);
                }
            }
    };
    mc.cx.coface.resize(hd.cap);
    mc.cx.codegen.resize(hd.cap);
    auto structure = [&](int p, const GradedMap& f, int ptgt) {
        GradedMap g;
        for (auto& [q, labels] : mc.cx.level[p].basis) {
            (void)labels;
            int rows = mc.cx.level[ptgt].dim(q);
            int cols = mc.cx.level[p].dim(q);
            F2Matrix m(rows, cols);
            auto itd = mc.diag.find({p, q});
            if (itd != mc.diag.end())
                for (int j = 0; j < (int)itd->second.size(); ++j) {
                    auto& e = itd->second[j];
                    F2Vec src(hd.level[p].dim(e.qa));
                    src.set(e.ia);
                    F2Vec u = f.at(e.qa, hd.level[p], hd.level[ptgt]).apply(src);
                    reduce_into(m, j, ptgt, e.i, e.qa, u, e.qa, u, q);
                }
            auto ito = mc.off.find({p, q});
            if (ito != mc.off.end()) {
                int base = itd != mc.diag.end() ? (int)itd->second.size() : 0;
                for (int j = 0; j < (int)ito->second.size(); ++j) {
                    auto& e = ito->second[j];
                    F2Vec sa(hd.level[p].dim(e.qa));
                    sa.set(e.ia);
                    F2Vec sb(hd.level[p].dim(e.qb));
                    sb.set(e.ib);
                    F2Vec u = f.at(e.qa, hd.level[p], hd.level[ptgt]).apply(sa);
                    F2Vec v = f.at(e.qb, hd.level[p], hd.level[ptgt]).apply(sb);
                    reduce_into(m, base + j, ptgt, 0, e.qa, u, e.qb, v, q);
                }
            }
            if (rows) g.deg[q] = std::move(m);
        }
        return g;
    };
    for (int p = 0; p < hd.cap; ++p) {
        mc.cx.coface[p].resize(p + 2);
        mc.cx.codegen[p].resize(p + 1);
        for (int i = 0; i <= p + 1; ++i)
            mc.cx.coface[p][i] = structure(p, hd.coface[p][i], p + 1);
        for (int i = 0; i <= p; ++i) mc.cx.codegen[p][i] = structure(p + 1, hd.codegen[p][i], p);
    }
    return mc;
}

F2Matrix CochainComplex::d(int p) const {
    auto it = delta.find(p);
    if (it != delta.end()) return it->second;
    return F2Matrix(dim(p + 1), dim(p));
}

void CochainComplex::validate() const {
    for (auto& [p, m] : delta) {
        if ((int)m.cols() != dim(p) || (int)m.rows() != dim(p + 1))
            throw std::invalid_argument("CochainComplex: delta shape mismatch");
        if (!(d(p + 1) * m).is_zero())
            throw std::invalid_argument("CochainComplex: delta∘delta != 0");
    }
}

std::map<int, HomologyEntry> cohomology(const CochainComplex& c) {
    std::map<int, HomologyEntry> h;
    for (auto& [p, n] : c.dims) {
        if (!n) continue;
        F2Matrix cycles = c.dim(p + 1) ? kernel_basis(c.d(p)) : F2Matrix::identity(n);
        F2Matrix bnd = c.d(p - 1).transposed();
        Subquotient sq = subquotient(cycles, bnd);
        h[p] = HomologyEntry{sq.dim, sq.reps};
    }
    return h;
}

UpsilonComplex upsilon(int s, int s2, int cap) {
    UpsilonComplex u;
    u.s = s;
    u.s2 = s2;
    Cosimplicial ha = universal_homology(kInfRank, s, s, cap);
    Cosimplicial hb = universal_homology(kInfRank, s2, s2, cap);
    u.tc = conormalized_tensor(ha, hb);
    int q = s + s2;
    for (int p = 0; p <= cap; ++p) {
        int n = u.tc.cx.dim(p, q);
        u.cpx.dims[p] = n;
        auto it = u.tc.cx.basis.find({p, q});
        if (it != u.tc.cx.basis.end()) u.cpx.labels[p] = it->second;
        if (p < cap && n) u.cpx.delta[p] = u.tc.cx.horizontal(p, q);
    }
    return u;
}

CochainComplex omega_bar(const UpsilonComplex& u) {
    if (u.s != u.s2) throw std::invalid_argument("omega_bar: needs equal weights");
    CochainComplex w;
    std::map<int, std::vector<int>> reps;      // column -> chosen pair indices
    std::map<int, std::vector<int>> fold;      // column -> full index -> rep position
    int pmax = u.cpx.dims.empty() ? -1 : u.cpx.dims.rbegin()->first;
    for (int p = 0; p <= pmax; ++p) {
        int n = u.cpx.dim(p);
        if (!n) {
            w.dims[p] = 0;
            continue;
        }
        F2Matrix sw = u.swap(p);
        std::vector<int> swap_of(n);
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r)
                if (sw.get(r, j)) swap_of[j] = r;
        auto& rp = reps[p];
        auto& fd = fold[p];
        fd.assign(n, -1);
        for (int j = 0; j < n; ++j)
            if (swap_of[j] >= j) {
                fd[j] = (int)rp.size();
                if (swap_of[j] != j) fd[swap_of[j]] = (int)rp.size();
                rp.push_back(j);
            }
        w.dims[p] = (int)rp.size();
        if (u.cpx.labels.count(p)) {
            std::vector<std::string> lab;
            for (int j : rp) lab.push_back(u.cpx.labels.at(p)[j]);
            w.labels[p] = std::move(lab);
        }
    }
    for (int p = 0; p < pmax; ++p) {
        if (!w.dims[p] || !w.dims.count(p + 1)) continue;
        F2Matrix d(w.dims[p + 1], w.dims[p]);
        F2Matrix du = u.cpx.d(p);
        for (int c = 0; c < w.dims[p]; ++c) {
            int j = reps[p][c];
            for (std::size_t r = 0; r < du.rows(); ++r)
                if (du.get(r, j)) d.flip(fold[p + 1][(int)r], c);
        }
        w.delta[p] = std::move(d);
    }
    return w;
}

namespace {

CochainComplex row_subcomplex(const UpsilonComplex& u, bool kernel) {
    CochainComplex out;
    std::map<int, F2Matrix> bases;
    int pmax = u.cpx.dims.empty() ? -1 : u.cpx.dims.rbegin()->first;
    for (int p = 0; p <= pmax; ++p) {
        int n = u.cpx.dim(p);
        if (!n) {
            out.dims[p] = 0;
            bases[p] = F2Matrix(0, 0);
            continue;
        }
        F2Matrix op = F2Matrix::identity(n) + u.swap(p);
        F2Matrix b;
        if (kernel) {
            b = kernel_basis(op);
        } else {
            RankProfile rp = rank_profile(op);
            b = F2Matrix(rp.rank, n);
            for (std::size_t r = 0; r < rp.rank; ++r) b.set_row(r, rp.reduced.row(r));
        }
        out.dims[p] = (int)b.rows();
        bases[p] = std::move(b);
    }
    for (int p = 0; p < pmax; ++p) {
        if (!out.dims[p]) continue;
        F2Matrix d(out.dims[p + 1], out.dims[p]);
        F2Matrix du = u.cpx.d(p);
        F2Matrix tgtT = bases[p + 1].transposed();
        for (int c = 0; c < out.dims[p]; ++c) {
            F2Vec w = du.apply(bases[p].row(c));
            auto x = solve(tgtT, w);
            if (!x)
                throw std::logic_error("row_subcomplex: differential escapes the subcomplex");
            for (auto r : x->support()) d.flip((int)r, c);
        }
        out.delta[p] = std::move(d);
    }
    return out;
}

}  // namespace

CochainComplex symmetrized_subcomplex(const UpsilonComplex& u) { return row_subcomplex(u, false); }

CochainComplex invariant_subcomplex(const UpsilonComplex& u) { return row_subcomplex(u, true); }

}  // namespace specseq
