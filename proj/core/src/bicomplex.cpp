#include "specseq/bicomplex.hpp"

#include <algorithm>
#include <stdexcept>

#include "specseq/dold_kan.hpp"

namespace specseq {

F2Matrix Bicomplex::vertical(int p, int q) const {
    auto it = vert.find({p, q});
    if (it != vert.end()) return it->second;
    return F2Matrix(dim(p, q - 1), dim(p, q));
}

F2Matrix Bicomplex::horizontal(int p, int q) const {
    auto it = horiz.find({p, q});
    if (it != horiz.end()) return it->second;
    return F2Matrix(dim(p + 1, q), dim(p, q));
}

int Bicomplex::min_col() const {
    int m = 0;
    bool any = false;
    for (auto& [pq, l] : basis) {
        (void)l;
        if (!any || pq.first < m) m = pq.first;
        any = true;
    }
    return m;
}

int Bicomplex::max_col() const {
    int m = -1;
    for (auto& [pq, l] : basis) {
        (void)l;
        m = std::max(m, pq.first);
    }
    return m;
}

int Bicomplex::min_deg() const {
    int m = 0;
    bool any = false;
    for (auto& [pq, l] : basis) {
        (void)l;
        if (!any || pq.second < m) m = pq.second;
        any = true;
    }
    return m;
}

int Bicomplex::max_deg() const {
    int m = -1;
    bool any = false;
    for (auto& [pq, l] : basis) {
        (void)l;
        if (!any || pq.second > m) m = pq.second;
        any = true;
    }
    return m;
}

void Bicomplex::validate() const {
    for (auto& [pq, m] : vert) {
        auto [p, q] = pq;
        if ((int)m.cols() != dim(p, q) || (int)m.rows() != dim(p, q - 1))
            throw std::invalid_argument("Bicomplex: vertical shape mismatch");
    }
    for (auto& [pq, m] : horiz) {
        auto [p, q] = pq;
        if ((int)m.cols() != dim(p, q) || (int)m.rows() != dim(p + 1, q))
            throw std::invalid_argument("Bicomplex: horizontal shape mismatch");
    }
    for (auto& [pq, l] : basis) {
        (void)l;
        auto [p, q] = pq;
        if (!(vertical(p, q - 1) * vertical(p, q)).is_zero())
            throw std::invalid_argument("Bicomplex: v∘v != 0");
        if (!(horizontal(p + 1, q) * horizontal(p, q)).is_zero())
            throw std::invalid_argument("Bicomplex: h∘h != 0");
        F2Matrix a = horizontal(p, q - 1) * vertical(p, q);
        F2Matrix b = vertical(p + 1, q) * horizontal(p, q);
        if (!(a == b)) throw std::invalid_argument("Bicomplex: differentials do not commute");
    }
}

F2Matrix BicomplexMap::at(int p, int q, const Bicomplex& src, const Bicomplex& tgt) const {
    auto it = blocks.find({p, q});
    if (it != blocks.end()) return it->second;
    return F2Matrix(tgt.dim(p, q), src.dim(p, q));
}

void BicomplexMap::validate(const Bicomplex& src, const Bicomplex& tgt) const {
    for (auto& [pq, m] : blocks) {
        auto [p, q] = pq;
        if ((int)m.cols() != src.dim(p, q) || (int)m.rows() != tgt.dim(p, q))
            throw std::invalid_argument("BicomplexMap: shape mismatch");
    }
    for (auto& [pq, l] : src.basis) {
        (void)l;
        auto [p, q] = pq;
        if (!(tgt.vertical(p, q) * at(p, q, src, tgt) ==
              at(p, q - 1, src, tgt) * src.vertical(p, q)))
            throw std::invalid_argument("BicomplexMap: vertical compatibility fails");
        if (!(tgt.horizontal(p, q) * at(p, q, src, tgt) ==
              at(p + 1, q, src, tgt) * src.horizontal(p, q)))
            throw std::invalid_argument("BicomplexMap: horizontal compatibility fails");
    }
}

BicomplexMap compose(const BicomplexMap& g, const BicomplexMap& f, const Bicomplex& src,
                     const Bicomplex& mid, const Bicomplex& tgt) {
    BicomplexMap h;
    for (auto& [pq, l] : src.basis) {
        (void)l;
        auto [p, q] = pq;
        h.blocks[pq] = g.at(p, q, mid, tgt) * f.at(p, q, src, mid);
    }
    return h;
}

Conormalization conormalize(const Cosimplicial& y) {
    Conormalization c;
    for (int p = 0; p <= y.cap; ++p) {
        for (auto& [q, labels] : y.level[p].basis) {
            int n = (int)labels.size();
            std::vector<F2Vec> span;
            for (int k = 1; k <= p; ++k) {
                F2Matrix dk = y.d(p - 1, k, q).transposed();  // rows = image vectors
                for (std::size_t r = 0; r < dk.rows(); ++r) {
                    F2Vec v = dk.row(r);
                    if (!v.is_zero()) span.push_back(v);
                }
            }
            RankProfile rp = rank_profile(F2Matrix::from_rows(span, n));
            std::vector<bool> is_pivot(n, false);
            std::vector<std::size_t> pivot_row(n, 0);
            for (std::size_t r = 0; r < rp.rank; ++r) {
                is_pivot[rp.pivots[r]] = true;
                pivot_row[rp.pivots[r]] = r;
            }
            std::vector<int> surv;
            for (int j = 0; j < n; ++j)
                if (!is_pivot[j]) surv.push_back(j);
            int nc = (int)surv.size();
            F2Matrix proj(nc, n), incl(n, nc);
            for (int cix = 0; cix < nc; ++cix) {
                proj.set(cix, surv[cix]);
                incl.set(surv[cix], cix);
            }
            // a pivot coordinate maps to the non-pivot tail of its echelon row
            for (int j = 0; j < n; ++j) {
                if (!is_pivot[j]) continue;
                F2Vec row = rp.reduced.row(pivot_row[j]);
                for (int cix = 0; cix < nc; ++cix)
                    if (row.get(surv[cix])) proj.set(cix, j);
            }
            std::vector<std::string> lab;
            for (int j : surv) lab.push_back(labels[j]);
            if (nc > 0) c.cx.basis[{p, q}] = std::move(lab);
            c.proj[{p, q}] = std::move(proj);
            c.incl[{p, q}] = std::move(incl);
            c.surviving[{p, q}] = std::move(surv);
        }
    }
    auto getm = [&](const std::map<std::pair<int, int>, F2Matrix>& m, int p, int q, int rows,
                    int cols) {
        auto it = m.find({p, q});
        return it == m.end() ? F2Matrix(rows, cols) : it->second;
    };
    for (int p = 0; p <= y.cap; ++p)
        for (auto& [q, labels] : y.level[p].basis) {
            (void)labels;
            int n = y.level[p].dim(q);
            F2Matrix proj_d =
                getm(c.proj, p, q - 1, c.cx.dim(p, q - 1), y.level[p].dim(q - 1));
            F2Matrix incl_q = getm(c.incl, p, q, n, c.cx.dim(p, q));
            F2Matrix v = proj_d * y.level[p].boundary(q) * incl_q;
            if (c.cx.dim(p, q)) c.cx.vert[{p, q}] = std::move(v);
            if (p < y.cap) {
                F2Matrix proj_h =
                    getm(c.proj, p + 1, q, c.cx.dim(p + 1, q), y.level[p + 1].dim(q));
                F2Matrix h = proj_h * y.d(p, 0, q) * incl_q;
                if (c.cx.dim(p, q)) c.cx.horiz[{p, q}] = std::move(h);
            }
        }
    return c;
}

BicomplexMap conormalized_map(const CosimplicialMap& f, const Cosimplicial& x,
                              const Cosimplicial& y, const Conormalization& cx,
                              const Conormalization& cy) {
    BicomplexMap m;
    for (auto& [pq, labels] : cx.cx.basis) {
        (void)labels;
        auto [p, q] = pq;
        auto ip = cy.proj.find({p, q});
        F2Matrix proj = ip != cy.proj.end()
                            ? ip->second
                            : F2Matrix(cy.cx.dim(p, q), y.level[p].dim(q));
        m.blocks[pq] = proj * f.at(p, q, x, y) * cx.incl.at({p, q});
    }
    return m;
}

int TensorConorm::index(int p, int qa, int ia, int qb, int ib) const {
    auto it = lookup.find({p, qa, qb});
    if (it == lookup.end()) return -1;
    // flat stride: stored alongside as dim_b implied by vector layout
    // (the vector covers dim_a * dim_b slots)
    // dim_b recovered from the stride table kept in strides_
    auto st = strides_.find({p, qa, qb});
    int nb = st->second;
    int flat = ia * nb + ib;
    if (flat < 0 || flat >= (int)it->second.size()) return -1;
    return it->second[flat];
}

F2Matrix TensorConorm::swap_matrix(int p, int q) const {
    auto it = pairs.find({p, q});
    int n = it == pairs.end() ? 0 : (int)it->second.size();
    F2Matrix m(n, n);
    for (int j = 0; j < n; ++j) {
        auto& pr = it->second[j];
        int k = index(p, pr.qb, pr.ib, pr.qa, pr.ia);
        if (k < 0) throw std::logic_error("swap_matrix: orbit not closed under swap");
        m.set(k, j);
    }
    return m;
}

TensorConorm conormalized_tensor(const Cosimplicial& a, const Cosimplicial& b) {
    if (!a.monomial_above_zero() || !b.monomial_above_zero())
        throw std::invalid_argument("conormalized_tensor: factors must be monomial above d^0");
    if (a.cap != b.cap) throw std::invalid_argument("conormalized_tensor: cap mismatch");
    TensorConorm t;
    int cap = a.cap;
    // hit masks: bit k set when the element is in the image of d^k (k >= 1)
    auto hit_masks = [cap](const Cosimplicial& x) {
        std::vector<std::map<int, std::vector<std::uint64_t>>> h(cap + 1);
        for (int p = 0; p <= cap; ++p)
            for (auto& [q, labels] : x.level[p].basis)
                h[p][q] = std::vector<std::uint64_t>(labels.size(), 0);
        for (int p = 1; p <= cap; ++p)
            for (int k = 1; k <= p; ++k)
                for (auto& [q, m] : x.coface[p - 1][k].deg)
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        for (std::size_t r = 0; r < m.rows(); ++r)
                            if (m.get(r, c)) h[p][q][r] |= std::uint64_t{1} << k;
        return h;
    };
    auto ha = hit_masks(a), hb = hit_masks(b);
    for (int p = 0; p <= cap; ++p) {
        for (auto& [qa, la] : a.level[p].basis)
            for (auto& [qb, lb] : b.level[p].basis) {
                int na = (int)la.size(), nb = (int)lb.size();
                if (!na || !nb) continue;
                int q = qa + qb;
                auto& pl = t.pairs[{p, q}];
                auto& lk = t.lookup[{p, qa, qb}];
                t.strides_[{p, qa, qb}] = nb;
                lk.assign((std::size_t)na * nb, -1);
                auto& labels = t.cx.basis[{p, q}];
                for (int ia = 0; ia < na; ++ia)
                    for (int ib = 0; ib < nb; ++ib) {
                        if (ha[p][qa][ia] & hb[p][qb][ib]) continue;
                        lk[(std::size_t)ia * nb + ib] = (int)pl.size();
                        pl.push_back({qa, ia, qb, ib});
                        labels.push_back(la[ia] + "|" + lb[ib]);
                    }
            }
        // drop empty entries so dim() and basis stay consistent
    }
    for (auto it = t.cx.basis.begin(); it != t.cx.basis.end();) {
        if (it->second.empty())
            it = t.cx.basis.erase(it);
        else
            ++it;
    }
    // vertical differential
    for (auto& [pq, pl] : t.pairs) {
        auto [p, q] = pq;
        F2Matrix v(t.cx.dim(p, q - 1), (int)pl.size());
        for (int j = 0; j < (int)pl.size(); ++j) {
            auto& pr = pl[j];
            F2Matrix bda = a.level[p].boundary(pr.qa);
            for (std::size_t r = 0; r < bda.rows(); ++r)
                if (bda.get(r, pr.ia)) {
                    int k = t.index(p, pr.qa - 1, (int)r, pr.qb, pr.ib);
                    if (k >= 0) v.flip(k, j);
                }
            F2Matrix bdb = b.level[p].boundary(pr.qb);
            for (std::size_t r = 0; r < bdb.rows(); ++r)
                if (bdb.get(r, pr.ib)) {
                    int k = t.index(p, pr.qa, pr.ia, pr.qb - 1, (int)r);
                    if (k >= 0) v.flip(k, j);
                }
        }
        if (v.rows()) t.cx.vert[pq] = std::move(v);
        // horizontal: diagonal d^0 ⊗ d^0
        if (p < cap) {
            F2Matrix h(t.cx.dim(p + 1, q), (int)pl.size());
            for (int j = 0; j < (int)pl.size(); ++j) {
                auto& pr = pl[j];
                F2Matrix d0a = a.d(p, 0, pr.qa);
                F2Matrix d0b = b.d(p, 0, pr.qb);
                for (std::size_t ra = 0; ra < d0a.rows(); ++ra) {
                    if (!d0a.get(ra, pr.ia)) continue;
                    for (std::size_t rb = 0; rb < d0b.rows(); ++rb) {
                        if (!d0b.get(rb, pr.ib)) continue;
                        int k = t.index(p + 1, pr.qa, (int)ra, pr.qb, (int)rb);
                        if (k >= 0) h.flip(k, j);
                    }
                }
            }
            if (h.rows()) t.cx.horiz[pq] = std::move(h);
        }
    }
    return t;
}

int OrbitConorm::index(int p, int q, int i, int pair_local) const {
    auto it = offsets.find({p, q});
    if (it == offsets.end()) return -1;
    return it->second[i] + pair_local;
}

OrbitConorm orbit_conorm(const Cosimplicial& y, int wcap) {
    OrbitConorm oc;
    oc.wcap = wcap;
    oc.tc = conormalized_tensor(y, y);
    const TensorConorm& tc = oc.tc;
    int qlo = tc.cx.min_deg(), qhi = tc.cx.max_deg();
    for (int p = 0; p <= y.cap; ++p)
        for (int q = qlo; q <= qhi + wcap; ++q) {
            std::vector<int> off(wcap + 2, 0);
            std::vector<std::string> labels;
            for (int i = 0; i <= wcap; ++i) {
                off[i] = (int)labels.size();
                auto it = tc.cx.basis.find({p, q - i});
                if (it != tc.cx.basis.end())
                    for (auto& l : it->second) labels.push_back("e" + std::to_string(i) + "|" + l);
            }
            off[wcap + 1] = (int)labels.size();
            if (labels.empty()) continue;
            oc.cx.basis[{p, q}] = std::move(labels);
            oc.offsets[{p, q}] = std::move(off);
        }
    for (auto& [pq, labels] : oc.cx.basis) {
        (void)labels;
        auto [p, q] = pq;
        int rows = oc.cx.dim(p, q - 1), cols = oc.cx.dim(p, q);
        F2Matrix v(rows, cols);
        F2Matrix h(oc.cx.dim(p + 1, q), cols);
        auto& off = oc.offsets.at(pq);
        for (int i = 0; i <= wcap; ++i) {
            int n_i = off[i + 1] - off[i];
            if (!n_i) continue;
            // e_i ⊗ hd(v)
            F2Matrix tv = tc.cx.vertical(p, q - i);
            for (std::size_t c = 0; c < tv.cols(); ++c)
                for (std::size_t r = 0; r < tv.rows(); ++r)
                    if (tv.get(r, c)) {
                        int k = oc.index(p, q - 1, i, (int)r);
                        v.flip(k, off[i] + (int)c);
                    }
            // e_{i-1} ⊗ (1 + σ)(v)
            if (i > 0) {
                F2Matrix sw = tc.swap_matrix(p, q - i);
                for (int c = 0; c < n_i; ++c) {
                    int k1 = oc.index(p, q - 1, i - 1, c);
                    v.flip(k1, off[i] + c);
                    for (int r = 0; r < n_i; ++r)
                        if (sw.get(r, c)) v.flip(oc.index(p, q - 1, i - 1, r), off[i] + c);
                }
            }
            // horizontal: e_i ⊗ cd(v)
            F2Matrix th = tc.cx.horizontal(p, q - i);
            for (std::size_t c = 0; c < th.cols(); ++c)
                for (std::size_t r = 0; r < th.rows(); ++r)
                    if (th.get(r, c)) {
                        int k = oc.index(p + 1, q, i, (int)r);
                        if (k >= 0) h.flip(k, off[i] + (int)c);
                    }
        }
        if (rows) oc.cx.vert[pq] = std::move(v);
        if (h.rows()) oc.cx.horiz[pq] = std::move(h);
    }
    return oc;
}

BicomplexMap orbit_e0_inclusion(const OrbitConorm& oc) {
    BicomplexMap m;
    for (auto& [pq, pl] : oc.tc.pairs) {
        auto [p, q] = pq;
        int n = (int)pl.size();
        if (!n) continue;
        F2Matrix b(oc.cx.dim(p, q), n);
        for (int j = 0; j < n; ++j) b.set(oc.index(p, q, 0, j), j);
        m.blocks[pq] = std::move(b);
    }
    return m;
}

BicomplexMap orbit_map(const CosimplicialMap& f, const Cosimplicial& x, const Cosimplicial& y,
                       const OrbitConorm& ox, const OrbitConorm& oy) {
    BicomplexMap m;
    for (auto& [pq, labels] : ox.cx.basis) {
        (void)labels;
        auto [p, q] = pq;
        F2Matrix b(oy.cx.dim(p, q), ox.cx.dim(p, q));
        auto& off = ox.offsets.at(pq);
        for (int i = 0; i <= ox.wcap; ++i) {
            auto it = ox.tc.pairs.find({p, q - i});
            if (it == ox.tc.pairs.end()) continue;
            if (i > oy.wcap) continue;
            for (int j = 0; j < (int)it->second.size(); ++j) {
                auto& pr = it->second[j];
                F2Matrix fa = f.at(p, pr.qa, x, y);
                F2Matrix fb = f.at(p, pr.qb, x, y);
                for (std::size_t ra = 0; ra < fa.rows(); ++ra) {
                    if (!fa.get(ra, pr.ia)) continue;
                    for (std::size_t rb = 0; rb < fb.rows(); ++rb) {
                        if (!fb.get(rb, pr.ib)) continue;
                        int k = oy.tc.index(p, pr.qa, (int)ra, pr.qb, (int)rb);
                        if (k >= 0) {
                            int tk = oy.index(p, q, i, k);
                            if (tk >= 0) b.flip(tk, off[i] + j);
                        }
                    }
                }
            }
        }
        m.blocks[pq] = std::move(b);
    }
    return m;
}

int BicomplexTensor::index(const Bicomplex&, const Bicomplex& b, int pa, int qa, int ia, int pb,
                           int qb, int ib) const {
    auto it = blocks.find({pa + pb, qa + qb});
    if (it == blocks.end()) return -1;
    for (auto& blk : it->second)
        if (blk.pa == pa && blk.qa == qa && blk.pb == pb && blk.qb == qb)
            return blk.offset + ia * b.dim(pb, qb) + ib;
    return -1;
}

BicomplexTensor tensor_bicomplex(const Bicomplex& a, const Bicomplex& b) {
    BicomplexTensor t;
    for (auto& [pqa, la] : a.basis)
        for (auto& [pqb, lb] : b.basis) {
            int p = pqa.first + pqb.first, q = pqa.second + pqb.second;
            auto& blks = t.blocks[{p, q}];
            auto& labels = t.cx.basis[{p, q}];
            blks.push_back({pqa.first, pqa.second, pqb.first, pqb.second, (int)labels.size()});
            for (auto& x : la)
                for (auto& y : lb) labels.push_back(x + "&" + y);
        }
    for (auto& [pq, blks] : t.blocks) {
        auto [p, q] = pq;
        F2Matrix v(t.cx.dim(p, q - 1), t.cx.dim(p, q));
        F2Matrix h(t.cx.dim(p + 1, q), t.cx.dim(p, q));
        for (auto& blk : blks) {
            int nb = b.dim(blk.pb, blk.qb);
            F2Matrix va = a.vertical(blk.pa, blk.qa);
            for (std::size_t c = 0; c < va.cols(); ++c)
                for (std::size_t r = 0; r < va.rows(); ++r)
                    if (va.get(r, c))
                        for (int ib = 0; ib < nb; ++ib) {
                            int k = t.index(a, b, blk.pa, blk.qa - 1, (int)r, blk.pb, blk.qb, ib);
                            if (k >= 0) v.flip(k, blk.offset + (int)c * nb + ib);
                        }
            F2Matrix vb = b.vertical(blk.pb, blk.qb);
            for (std::size_t c = 0; c < vb.cols(); ++c)
                for (std::size_t r = 0; r < vb.rows(); ++r)
                    if (vb.get(r, c))
                        for (int ia = 0; ia < a.dim(blk.pa, blk.qa); ++ia) {
                            int k = t.index(a, b, blk.pa, blk.qa, ia, blk.pb, blk.qb - 1, (int)r);
                            if (k >= 0) v.flip(k, blk.offset + ia * nb + (int)c);
                        }
            F2Matrix hb_a = a.horizontal(blk.pa, blk.qa);
            for (std::size_t c = 0; c < hb_a.cols(); ++c)
                for (std::size_t r = 0; r < hb_a.rows(); ++r)
                    if (hb_a.get(r, c))
                        for (int ib = 0; ib < nb; ++ib) {
                            int k = t.index(a, b, blk.pa + 1, blk.qa, (int)r, blk.pb, blk.qb, ib);
                            if (k >= 0) h.flip(k, blk.offset + (int)c * nb + ib);
                        }
            F2Matrix hb_b = b.horizontal(blk.pb, blk.qb);
            for (std::size_t c = 0; c < hb_b.cols(); ++c)
                for (std::size_t r = 0; r < hb_b.rows(); ++r)
                    if (hb_b.get(r, c))
                        for (int ia = 0; ia < a.dim(blk.pa, blk.qa); ++ia) {
                            int k = t.index(a, b, blk.pa, blk.qa, ia, blk.pb + 1, blk.qb, (int)r);
                            if (k >= 0) h.flip(k, blk.offset + ia * nb + (int)c);
                        }
        }
        if (v.rows()) t.cx.vert[pq] = std::move(v);
        if (h.rows()) t.cx.horiz[pq] = std::move(h);
    }
    return t;
}

BicomplexMap alexander_whitney(const Cosimplicial& x, const Cosimplicial& y,
                               const Conormalization& cx, const Conormalization& cy,
                               const BicomplexTensor& t, const TensorConorm& tc) {
    BicomplexMap m;
    int cap = std::min(x.cap, y.cap);
    // normalized chain sections per (level, degree); the coordinate section
    // would not give a map of bicomplexes
    std::map<std::pair<int, int>, F2Matrix> nux, nuy;
    auto section = [](std::map<std::pair<int, int>, F2Matrix>& memo, const Cosimplicial& z,
                      const Conormalization& cz, int k, int q) -> const F2Matrix& {
        auto it = memo.find({k, q});
        if (it == memo.end())
            it = memo.emplace(std::make_pair(k, q), normalized_section(z, cz, k, q)).first;
        return it->second;
    };
    for (auto& [pq, blks] : t.blocks) {
        auto [p, q] = pq;
        if (p > cap) continue;  // the conormalized tensor has no such column
        F2Matrix bm(tc.cx.dim(p, q), t.cx.dim(p, q));
        for (auto& blk : blks) {
            int pa = blk.pa, qa = blk.qa, pb = blk.pb, qb = blk.qb;
            // left factor: include, then apply d^{pa+1}, ..., d^{p}
            F2Matrix lx = section(nux, x, cx, pa, qa);
            for (int lvl = pa; lvl < p; ++lvl) lx = x.d(lvl, lvl + 1, qa) * lx;
            // right factor: include, then apply d^0, d^1, ..., d^{pa-1}
            F2Matrix ry = section(nuy, y, cy, pb, qb);
            for (int lvl = pb; lvl < p; ++lvl) ry = y.d(lvl, lvl - pb, qb) * ry;
            int nb = cy.cx.dim(pb, qb);
            F2Matrix lxt = lx.transposed(), ryt = ry.transposed();
            for (std::size_t ia = 0; ia < lx.cols(); ++ia) {
                F2Vec u = lxt.row(ia);
                for (int ib = 0; ib < nb; ++ib) {
                    F2Vec v = ryt.row(ib);
                    for (auto ra : u.support())
                        for (auto rb : v.support()) {
                            int k = tc.index(p, qa, (int)ra, qb, (int)rb);
                            if (k >= 0) bm.flip(k, blk.offset + (int)ia * nb + ib);
                        }
                }
            }
        }
        m.blocks[pq] = std::move(bm);
    }
    return m;
}

namespace {

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    // iterative enumeration in lexicographic order
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        out.push_back({});
        return;
    }
    if (k > n) return;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

namespace {

// Per-degree layout of the level tensor (X ⊗ Y)^n_q as one flat space.
struct DiagLayout {
    struct Blk {
        int qa, qb, da, db, off;
    };
    std::vector<Blk> blks;
    int dim = 0;
};

DiagLayout diag_layout(const Cosimplicial& x, const Cosimplicial& y, int n, int q) {
    DiagLayout L;
    for (int qa = 0; qa <= q; ++qa) {
        int da = x.level[n].dim(qa), db = y.level[n].dim(q - qa);
        if (!da || !db) continue;
        L.blks.push_back({qa, q - qa, da, db, L.dim});
        L.dim += da * db;
    }
    return L;
}

// Chain-level lift of the conormalized diagonal classes into the normalized
// subspace ∩_i ker(s^i ⊗ s^i) of the level tensor; column j represents pair j.
F2Matrix diag_normalized_section(const Cosimplicial& x, const Cosimplicial& y, int n, int q,
                                 const std::vector<TensorConorm::Pair>& pl, const DiagLayout& L) {
    int np = (int)pl.size();
    if (!np) return F2Matrix(L.dim, 0);
    auto flat = [&](const TensorConorm::Pair& pr) -> int {
        for (auto& b : L.blks)
            if (b.qa == pr.qa) return b.off + pr.ia * b.db + pr.ib;
        return -1;
    };
    if (n == 0) {
        F2Matrix nu(L.dim, np);
        for (int j = 0; j < np; ++j) nu.set(flat(pl[j]), j);
        return nu;
    }
    DiagLayout T = diag_layout(x, y, n - 1, q);
    F2Matrix stacked(0, L.dim);
    for (int i = 0; i < n; ++i) {
        F2Matrix si(T.dim, L.dim);
        for (auto& b : L.blks) {
            const DiagLayout::Blk* tb = nullptr;
            for (auto& c : T.blks)
                if (c.qa == b.qa) tb = &c;
            if (!tb) continue;
            F2Matrix sx = x.s(n - 1, i, b.qa), sy = y.s(n - 1, i, b.qb);
            for (int ia = 0; ia < b.da; ++ia)
                for (int ib = 0; ib < b.db; ++ib)
                    for (int ra = 0; ra < tb->da; ++ra) {
                        if (!sx.get(ra, ia)) continue;
                        for (int rb = 0; rb < tb->db; ++rb)
                            if (sy.get(rb, ib))
                                si.flip(tb->off + ra * tb->db + rb, b.off + ia * b.db + ib);
                    }
        }
        stacked = F2Matrix::vstack(stacked, si);
    }
    F2Matrix ker = kernel_basis(stacked);
    if ((int)ker.rows() != np) throw std::logic_error("shuffle: normalized kernel dim mismatch");
    F2Matrix p_rows(np, np);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            if (ker.get(i, flat(pl[j]))) p_rows.set(i, j);
    auto alpha = inverse(p_rows.transposed());
    if (!alpha) throw std::logic_error("shuffle: kernel does not project isomorphically");
    return ker.transposed() * *alpha;
}

}  // namespace

BicomplexMap shuffle(const Cosimplicial& x, const Cosimplicial& y, const Conormalization& cx,
                     const Conormalization& cy, const BicomplexTensor& t, const TensorConorm& tc) {
    BicomplexMap m;
    for (auto& [pq, pl] : tc.pairs) {
        auto [n, q] = pq;
        F2Matrix bm(t.cx.dim(n, q), (int)pl.size());
        DiagLayout L = diag_layout(x, y, n, q);
        F2Matrix nut = diag_normalized_section(x, y, n, q, pl, L).transposed();
        for (int j = 0; j < (int)pl.size(); ++j) {
            for (auto flatidx : nut.row((std::size_t)j).support()) {
            const DiagLayout::Blk* blk = nullptr;
            for (auto& b : L.blks)
                if ((int)flatidx >= b.off && (int)flatidx < b.off + b.da * b.db) blk = &b;
            TensorConorm::Pair pr{blk->qa, ((int)flatidx - blk->off) / blk->db, blk->qb,
                                  ((int)flatidx - blk->off) % blk->db};
            for (int p = 0; p <= n; ++p) {
                int q2 = n - p;
                std::vector<std::vector<int>> subs;
                subsets_of_size(n, p, subs);
                for (auto& A : subs) {
                    std::vector<int> B;
                    {
                        std::vector<bool> in(n, false);
                        for (int a0 : A) in[a0] = true;
                        for (int i = 0; i < n; ++i)
                            if (!in[i]) B.push_back(i);
                    }
                    // x-factor: apply s^{B} largest-first, level n -> p
                    F2Vec xv(x.level[n].dim(pr.qa));
                    xv.set(pr.ia);
                    {
                        int lvl = n;
                        for (int bi = (int)B.size() - 1; bi >= 0; --bi) {
                            xv = x.s(lvl - 1, B[bi], pr.qa).apply(xv);
                            --lvl;
                        }
                    }
                    if (xv.is_zero()) continue;
                    F2Vec yv(y.level[n].dim(pr.qb));
                    yv.set(pr.ib);
                    {
                        int lvl = n;
                        for (int ai = (int)A.size() - 1; ai >= 0; --ai) {
                            yv = y.s(lvl - 1, A[ai], pr.qb).apply(yv);
                            --lvl;
                        }
                    }
                    if (yv.is_zero()) continue;
                    F2Vec u = cx.proj.at({p, pr.qa}).apply(xv);
                    F2Vec v = cy.proj.at({q2, pr.qb}).apply(yv);
                    for (auto ra : u.support())
                        for (auto rb : v.support()) {
                            int k = t.index(cx.cx, cy.cx, p, pr.qa, (int)ra, q2, pr.qb, (int)rb);
                            if (k >= 0) bm.flip(k, j);
                        }
                }
            }
            }
        }
        m.blocks[pq] = std::move(bm);
    }
    return m;
}

BicomplexMap tensor_swap(const TensorConorm& tc) {
    BicomplexMap m;
    for (auto& [pq, pl] : tc.pairs) {
        (void)pl;
        m.blocks[pq] = tc.swap_matrix(pq.first, pq.second);
    }
    return m;
}

BicomplexMap bicomplex_tensor_swap(const Bicomplex& a, const BicomplexTensor& t) {
    BicomplexMap m;
    for (auto& [pq, blks] : t.blocks) {
        auto [p, q] = pq;
        F2Matrix bm(t.cx.dim(p, q), t.cx.dim(p, q));
        for (auto& blk : blks) {
            int na = a.dim(blk.pa, blk.qa), nb = a.dim(blk.pb, blk.qb);
            for (int ia = 0; ia < na; ++ia)
                for (int ib = 0; ib < nb; ++ib) {
                    int k = t.index(a, a, blk.pb, blk.qb, ib, blk.pa, blk.qa, ia);
                    if (k < 0) throw std::logic_error("bicomplex_tensor_swap: missing block");
                    bm.set(k, blk.offset + ia * nb + ib);
                }
        }
        m.blocks[pq] = std::move(bm);
    }
    return m;
}

ChainComplex total_complex(const Bicomplex& b, int plo, int phi, int nlo, int nhi) {
    ChainComplex c;
    std::map<int, std::vector<std::pair<int, int>>> off;  // n -> per column (p, offset)
    for (int n = nlo; n <= nhi; ++n) {
        std::vector<std::string> labels;
        for (int p = plo; p <= phi; ++p) {
            int q = n + p;
            auto it = b.basis.find({p, q});
            if (it == b.basis.end()) continue;
            off[n].push_back({p, (int)labels.size()});
            for (auto& l : it->second) labels.push_back("c" + std::to_string(p) + ":" + l);
        }
        c.basis[n] = std::move(labels);
    }
    auto find_off = [&](int n, int p) -> int {
        auto it = off.find(n);
        if (it == off.end()) return -1;
        for (auto& [pp, o] : it->second)
            if (pp == p) return o;
        return -1;
    };
    for (int n = nlo + 1; n <= nhi; ++n) {
        F2Matrix d(c.dim(n - 1), c.dim(n));
        for (auto& [p, o] : off[n]) {
            int q = n + p;
            F2Matrix v = b.vertical(p, q);
            int vo = find_off(n - 1, p);
            if (vo >= 0)
                for (std::size_t cc = 0; cc < v.cols(); ++cc)
                    for (std::size_t r = 0; r < v.rows(); ++r)
                        if (v.get(r, cc)) d.flip(vo + (int)r, o + (int)cc);
            if (p + 1 <= phi) {
                F2Matrix h = b.horizontal(p, q);
                int ho = find_off(n - 1, p + 1);
                if (ho >= 0)
                    for (std::size_t cc = 0; cc < h.cols(); ++cc)
                        for (std::size_t r = 0; r < h.rows(); ++r)
                            if (h.get(r, cc)) d.flip(ho + (int)r, o + (int)cc);
            }
        }
        c.diff[n] = std::move(d);
    }
    return c;
}

}  // namespace specseq
