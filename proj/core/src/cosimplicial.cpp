#include "specseq/cosimplicial.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace specseq {

F2Matrix GradedMap::at(int q, const ChainComplex& src, const ChainComplex& tgt) const {
    auto it = deg.find(q);
    if (it != deg.end()) return it->second;
    return F2Matrix(tgt.dim(q), src.dim(q));
}

namespace {

void check_chain_map(const GradedMap& f, const ChainComplex& src, const ChainComplex& tgt,
                     const char* what) {
    for (auto& [q, m] : f.deg) {
        if ((int)m.cols() != src.dim(q) || (int)m.rows() != tgt.dim(q))
            throw std::invalid_argument(std::string(what) + ": shape mismatch at degree " +
                                        std::to_string(q));
    }
    int lo = std::min(src.min_degree(), tgt.min_degree());
    int hi = std::max(src.max_degree(), tgt.max_degree());
    for (int q = lo; q <= hi; ++q) {
        F2Matrix lhs = tgt.boundary(q) * f.at(q, src, tgt);
        F2Matrix rhs = f.at(q - 1, src, tgt) * src.boundary(q);
        if (!(lhs == rhs))
            throw std::invalid_argument(std::string(what) + ": not a chain map at degree " +
                                        std::to_string(q));
    }
}

void check_equal(const F2Matrix& a, const F2Matrix& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what));
}

}  // namespace

void Cosimplicial::validate() const {
    if ((int)level.size() != cap + 1 || (int)coface.size() < cap || (int)codegen.size() < cap)
        throw std::invalid_argument("Cosimplicial: level/structure count mismatch");
    for (auto& l : level) l.validate();
    for (int p = 0; p < cap; ++p) {
        if ((int)coface[p].size() != p + 2)
            throw std::invalid_argument("Cosimplicial: coface count at level " + std::to_string(p));
        if ((int)codegen[p].size() != p + 1)
            throw std::invalid_argument("Cosimplicial: codegen count at level " + std::to_string(p));
        for (int i = 0; i <= p + 1; ++i)
            check_chain_map(coface[p][i], level[p], level[p + 1], "coface");
        for (int i = 0; i <= p; ++i)
            check_chain_map(codegen[p][i], level[p + 1], level[p], "codegen");
    }
    int qlo = 0, qhi = -1;
    for (auto& l : level)
        if (!l.basis.empty()) {
            qlo = std::min(qlo, l.min_degree());
            qhi = std::max(qhi, l.max_degree());
        }
    for (int q = qlo; q <= qhi; ++q) {
        // d^j d^i = d^i d^{j-1} for i < j
        for (int p = 0; p + 2 <= cap; ++p)
            for (int j = 1; j <= p + 2; ++j)
                for (int i = 0; i < j; ++i)
                    check_equal(d(p + 1, j, q) * d(p, i, q), d(p + 1, i, q) * d(p, j - 1, q),
                                "cosimplicial identity d.d");
        // s^j s^i = s^i s^{j+1} for i <= j
        for (int p = 0; p + 2 <= cap; ++p)
            for (int j = 0; j <= p; ++j)
                for (int i = 0; i <= j; ++i)
                    check_equal(s(p, j, q) * s(p + 1, i, q), s(p, i, q) * s(p + 1, j + 1, q),
                                "cosimplicial identity s.s");
        // s^j d^i relations
        for (int p = 0; p + 1 <= cap; ++p)
            for (int j = 0; j <= p; ++j)
                for (int i = 0; i <= p + 1; ++i) {
                    F2Matrix lhs = s(p, j, q) * d(p, i, q);
                    if (i == j || i == j + 1)
                        check_equal(lhs, F2Matrix::identity(level[p].dim(q)),
                                    "cosimplicial identity s.d = id");
                    else if (i < j)
                        check_equal(lhs, d(p - 1, i, q) * s(p - 1, j - 1, q),
                                    "cosimplicial identity s.d (i<j)");
                    else
                        check_equal(lhs, d(p - 1, i - 1, q) * s(p - 1, j, q),
                                    "cosimplicial identity s.d (i>j+1)");
                }
    }
}

bool Cosimplicial::monomial_above_zero() const {
    for (int p = 0; p < cap; ++p)
        for (int i = 1; i <= p + 1; ++i)
            for (auto& [q, m] : coface[p][i].deg) {
                (void)q;
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    int cnt = 0;
                    for (std::size_t r = 0; r < m.rows(); ++r) cnt += m.get(r, c);
                    if (cnt > 1) return false;
                }
            }
    return true;
}

void CosimplicialMap::validate(const Cosimplicial& x, const Cosimplicial& y) const {
    if ((int)lvl.size() != x.cap + 1 || x.cap != y.cap)
        throw std::invalid_argument("CosimplicialMap: level count mismatch");
    for (int p = 0; p <= x.cap; ++p)
        check_chain_map(lvl[p], x.level[p], y.level[p], "cosimplicial map");
    int qlo = 0, qhi = -1;
    for (auto& l : x.level)
        if (!l.basis.empty()) {
            qlo = std::min(qlo, l.min_degree());
            qhi = std::max(qhi, l.max_degree());
        }
    for (auto& l : y.level)
        if (!l.basis.empty()) {
            qlo = std::min(qlo, l.min_degree());
            qhi = std::max(qhi, l.max_degree());
        }
    for (int q = qlo; q <= qhi; ++q)
        for (int p = 0; p < x.cap; ++p) {
            for (int i = 0; i <= p + 1; ++i)
                check_equal(y.d(p, i, q) * at(p, q, x, y), at(p + 1, q, x, y) * x.d(p, i, q),
                            "cosimplicial map: coface compatibility");
            for (int i = 0; i <= p; ++i)
                check_equal(y.s(p, i, q) * at(p + 1, q, x, y), at(p, q, x, y) * x.s(p, i, q),
                            "cosimplicial map: codegen compatibility");
        }
}

Cosimplicial universal_example(int r, int s, int t, int cap) {
    bool fin = (r != kInfRank);
    if (fin && r < 1) throw std::invalid_argument("universal_example: r must be >= 1");
    if (s < 0 || t < s) throw std::invalid_argument("universal_example: need 0 <= s <= t");
    if (cap < 0) {
        if (!fin) throw std::invalid_argument("universal_example: unbounded r needs a cap");
        cap = 2 * (s + r) + 1;
    }
    int shift_q = t - s;
    Cosimplicial X;
    X.cap = cap;
    X.level.resize(cap + 1);
    auto kmax = [&](int p) { return fin ? std::min(s + r - 1, p) : p; };

    for (int p = 0; p <= cap; ++p) {
        ChainComplex& c = X.level[p];
        for (int k = s; k <= kmax(p); ++k) {
            auto inj = injections(p, k);
            std::vector<std::string> labels;
            for (auto& e : inj) labels.push_back(e.label());
            c.basis[k + shift_q] = std::move(labels);
        }
        for (int k = s + 1; k <= kmax(p); ++k) {
            auto src = injections(p, k);
            auto tgt = injections(p, k - 1);
            std::map<std::uint64_t, int> idx;
            for (int i = 0; i < (int)tgt.size(); ++i) idx[tgt[i].mask] = i;
            F2Matrix m(tgt.size(), src.size());
            for (int j = 0; j < (int)src.size(); ++j)
                for (int f = 0; f <= k; ++f) m.flip(idx[src[j].face(f).mask], j);
            c.diff[k + shift_q] = std::move(m);
        }
    }
    X.coface.resize(cap);
    X.codegen.resize(cap);
    for (int p = 0; p < cap; ++p) {
        X.coface[p].resize(p + 2);
        X.codegen[p].resize(p + 1);
        for (int k = s; k <= kmax(p); ++k) {
            auto src = injections(p, k);
            auto tgt = injections(p + 1, k);
            std::map<std::uint64_t, int> tidx;
            for (int i = 0; i < (int)tgt.size(); ++i) tidx[tgt[i].mask] = i;
            for (int i = 0; i <= p + 1; ++i) {
                F2Matrix m(tgt.size(), src.size());
                for (int j = 0; j < (int)src.size(); ++j)
                    m.set(tidx[src[j].coface(i).mask], j);
                X.coface[p][i].deg[k + shift_q] = std::move(m);
            }
        }
        for (int k = s; k <= kmax(p + 1); ++k) {
            auto src = injections(p + 1, k);
            bool tgt_has = (k <= kmax(p));
            auto tgt = tgt_has ? injections(p, k) : std::vector<Injection>{};
            std::map<std::uint64_t, int> tidx;
            for (int i = 0; i < (int)tgt.size(); ++i) tidx[tgt[i].mask] = i;
            for (int i = 0; i <= p; ++i) {
                F2Matrix m(tgt.size(), src.size());
                for (int j = 0; j < (int)src.size(); ++j) {
                    auto se = src[j].codegen(i);
                    if (se) m.set(tidx.at(se->mask), j);
                }
                X.codegen[p][i].deg[k + shift_q] = std::move(m);
            }
        }
    }
    return X;
}

Cosimplicial constant_point(int cap) {
    Cosimplicial X;
    X.cap = cap;
    X.level.resize(cap + 1);
    for (auto& l : X.level) l.basis[0] = {"*"};
    X.coface.resize(cap);
    X.codegen.resize(cap);
    for (int p = 0; p < cap; ++p) {
        X.coface[p].resize(p + 2);
        X.codegen[p].resize(p + 1);
        for (int i = 0; i <= p + 1; ++i) X.coface[p][i].deg[0] = F2Matrix::identity(1);
        for (int i = 0; i <= p; ++i) X.codegen[p][i].deg[0] = F2Matrix::identity(1);
    }
    return X;
}

namespace {

F2Matrix block_diag(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) m.set(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.get(i, j)) m.set(a.rows() + i, a.cols() + j);
    return m;
}

std::vector<int> degrees_of(const ChainComplex& a, const ChainComplex& b) {
    std::vector<int> qs;
    for (auto& [q, l] : a.basis) {
        (void)l;
        qs.push_back(q);
    }
    for (auto& [q, l] : b.basis) {
        (void)l;
        if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    }
    std::sort(qs.begin(), qs.end());
    return qs;
}

}  // namespace

Cosimplicial direct_sum(const Cosimplicial& a, const Cosimplicial& b) {
    if (a.cap != b.cap) throw std::invalid_argument("direct_sum: cap mismatch");
    Cosimplicial X;
    X.cap = a.cap;
    X.level.resize(X.cap + 1);
    for (int p = 0; p <= X.cap; ++p) {
        for (int q : degrees_of(a.level[p], b.level[p])) {
            std::vector<std::string> labels;
            if (a.level[p].basis.count(q))
                for (auto& l : a.level[p].basis.at(q)) labels.push_back("L:" + l);
            if (b.level[p].basis.count(q))
                for (auto& l : b.level[p].basis.at(q)) labels.push_back("R:" + l);
            X.level[p].basis[q] = std::move(labels);
            X.level[p].diff[q] = block_diag(a.level[p].boundary(q), b.level[p].boundary(q));
        }
    }
    X.coface.resize(X.cap);
    X.codegen.resize(X.cap);
    for (int p = 0; p < X.cap; ++p) {
        X.coface[p].resize(p + 2);
        X.codegen[p].resize(p + 1);
        for (int q : degrees_of(a.level[p], b.level[p])) {
            for (int i = 0; i <= p + 1; ++i)
                X.coface[p][i].deg[q] = block_diag(a.d(p, i, q), b.d(p, i, q));
        }
        for (int q : degrees_of(a.level[p + 1], b.level[p + 1]))
            for (int i = 0; i <= p; ++i)
                X.codegen[p][i].deg[q] = block_diag(a.s(p, i, q), b.s(p, i, q));
    }
    return X;
}

namespace {

/// Offsets of the (qa, qb) blocks inside the tensor basis at total degree q.
struct TensorLevel {
    // ordered blocks: (qa, qb, offset); dims implied by the factors
    std::vector<std::array<int, 3>> blocks;
    int total = 0;
};

std::map<int, TensorLevel> tensor_layout(const ChainComplex& a, const ChainComplex& b) {
    std::map<int, TensorLevel> out;
    for (auto& [qa, la] : a.basis)
        for (auto& [qb, lb] : b.basis) {
            if (la.empty() || lb.empty()) continue;
            TensorLevel& t = out[qa + qb];
            t.blocks.push_back({qa, qb, t.total});
            t.total += (int)la.size() * (int)lb.size();
        }
    return out;
}

F2Matrix tensor_map(const std::map<int, TensorLevel>& src_layout,
                    const std::map<int, TensorLevel>& tgt_layout, int q_src, int q_tgt,
                    const ChainComplex& sa, const ChainComplex& sb, const ChainComplex& ta,
                    const ChainComplex& tb, const GradedMap& fa, const GradedMap& fb) {
    // (fa ⊗ fb) restricted to total degree q_src -> q_tgt (degreewise maps).
    int srows = 0, scols = 0;
    auto its = src_layout.find(q_src);
    auto itt = tgt_layout.find(q_tgt);
    scols = its == src_layout.end() ? 0 : its->second.total;
    srows = itt == tgt_layout.end() ? 0 : itt->second.total;
    F2Matrix m(srows, scols);
    if (!scols || !srows) return m;
    for (auto& [qa, qb, off] : its->second.blocks) {
        F2Matrix ma = fa.at(qa, sa, ta);
        F2Matrix mb = fb.at(qb, sb, tb);
        if (ma.is_zero() || mb.is_zero()) continue;
        // locate target block (qa, qb) (degreewise maps preserve qa, qb)
        int toff = -1;
        for (auto& [tqa, tqb, to] : itt->second.blocks)
            if (tqa == qa && tqb == qb) {
                toff = to;
                break;
            }
        if (toff < 0) continue;
        int nb = sb.dim(qb), ntb = tb.dim(qb);
        for (std::size_t ia = 0; ia < ma.cols(); ++ia)
            for (std::size_t ra = 0; ra < ma.rows(); ++ra) {
                if (!ma.get(ra, ia)) continue;
                for (std::size_t ib = 0; ib < mb.cols(); ++ib)
                    for (std::size_t rb = 0; rb < mb.rows(); ++rb)
                        if (mb.get(rb, ib))
                            m.flip(toff + (int)ra * ntb + (int)rb, off + (int)ia * nb + (int)ib);
            }
        (void)nb;
    }
    return m;
}

}  // namespace

Cosimplicial tensor(const Cosimplicial& a, const Cosimplicial& b) {
    if (a.cap != b.cap) throw std::invalid_argument("tensor: cap mismatch");
    Cosimplicial X;
    X.cap = a.cap;
    X.level.resize(X.cap + 1);
    std::vector<std::map<int, TensorLevel>> layout(X.cap + 1);
    for (int p = 0; p <= X.cap; ++p) {
        layout[p] = tensor_layout(a.level[p], b.level[p]);
        for (auto& [q, tl] : layout[p]) {
            std::vector<std::string> labels;
            for (auto& [qa, qb, off] : tl.blocks) {
                (void)off;
                for (auto& la : a.level[p].basis.at(qa))
                    for (auto& lb : b.level[p].basis.at(qb)) labels.push_back(la + "|" + lb);
            }
            X.level[p].basis[q] = std::move(labels);
        }
        // boundary: da ⊗ 1 + 1 ⊗ db (no signs over GF(2))
        for (auto& [q, tl] : layout[p]) {
            (void)tl;
            F2Matrix m(layout[p].count(q - 1) ? layout[p].at(q - 1).total : 0,
                       layout[p].at(q).total);
            for (auto& [qa, qb, off] : layout[p].at(q).blocks) {
                F2Matrix bd_a = a.level[p].boundary(qa);
                F2Matrix bd_b = b.level[p].boundary(qb);
                int nb = b.level[p].dim(qb);
                // left term lands in block (qa-1, qb)
                if (layout[p].count(q - 1))
                    for (auto& [tqa, tqb, toff] : layout[p].at(q - 1).blocks) {
                        if (tqa == qa - 1 && tqb == qb) {
                            for (std::size_t ia = 0; ia < bd_a.cols(); ++ia)
                                for (std::size_t ra = 0; ra < bd_a.rows(); ++ra)
                                    if (bd_a.get(ra, ia))
                                        for (int ib = 0; ib < nb; ++ib)
                                            m.flip(toff + (int)ra * nb + ib,
                                                   off + (int)ia * nb + ib);
                        }
                        if (tqa == qa && tqb == qb - 1) {
                            int ntb = b.level[p].dim(qb - 1);
                            for (std::size_t ib = 0; ib < bd_b.cols(); ++ib)
                                for (std::size_t rb = 0; rb < bd_b.rows(); ++rb)
                                    if (bd_b.get(rb, ib))
                                        for (int ia = 0; ia < a.level[p].dim(qa); ++ia)
                                            m.flip(toff + ia * ntb + (int)rb,
                                                   off + ia * nb + (int)ib);
                        }
                    }
            }
            if (m.rows() && m.cols()) X.level[p].diff[q] = std::move(m);
        }
    }
    X.coface.resize(X.cap);
    X.codegen.resize(X.cap);
    for (int p = 0; p < X.cap; ++p) {
        X.coface[p].resize(p + 2);
        X.codegen[p].resize(p + 1);
        for (auto& [q, tl] : layout[p]) {
            (void)tl;
            for (int i = 0; i <= p + 1; ++i)
                X.coface[p][i].deg[q] =
                    tensor_map(layout[p], layout[p + 1], q, q, a.level[p], b.level[p],
                               a.level[p + 1], b.level[p + 1], a.coface[p][i], b.coface[p][i]);
        }
        for (auto& [q, tl] : layout[p + 1]) {
            (void)tl;
            for (int i = 0; i <= p; ++i)
                X.codegen[p][i].deg[q] =
                    tensor_map(layout[p + 1], layout[p], q, q, a.level[p + 1], b.level[p + 1],
                               a.level[p], b.level[p], a.codegen[p][i], b.codegen[p][i]);
        }
    }
    return X;
}

CosimplicialMap sum_inclusion(const Cosimplicial& a, const Cosimplicial& b, int which) {
    CosimplicialMap f;
    f.lvl.resize(a.cap + 1);
    for (int p = 0; p <= a.cap; ++p)
        for (int q : degrees_of(a.level[p], b.level[p])) {
            int na = a.level[p].dim(q), nb = b.level[p].dim(q);
            int src = which == 0 ? na : nb;
            F2Matrix m(na + nb, src);
            for (int i = 0; i < src; ++i) m.set(which == 0 ? i : na + i, i);
            f.lvl[p].deg[q] = std::move(m);
        }
    return f;
}

CosimplicialMap sum_projection(const Cosimplicial& a, const Cosimplicial& b, int which) {
    CosimplicialMap f;
    f.lvl.resize(a.cap + 1);
    for (int p = 0; p <= a.cap; ++p)
        for (int q : degrees_of(a.level[p], b.level[p])) {
            int na = a.level[p].dim(q), nb = b.level[p].dim(q);
            int tgt = which == 0 ? na : nb;
            F2Matrix m(tgt, na + nb);
            for (int i = 0; i < tgt; ++i) m.set(i, which == 0 ? i : na + i);
            f.lvl[p].deg[q] = std::move(m);
        }
    return f;
}

CosimplicialMap diagonal_map(const Cosimplicial& x) {
    CosimplicialMap f;
    f.lvl.resize(x.cap + 1);
    for (int p = 0; p <= x.cap; ++p)
        for (auto& [q, labels] : x.level[p].basis) {
            int n = (int)labels.size();
            F2Matrix m(2 * n, n);
            for (int i = 0; i < n; ++i) {
                m.set(i, i);
                m.set(n + i, i);
            }
            f.lvl[p].deg[q] = std::move(m);
        }
    return f;
}

namespace {

/// Matrix expressing classes of degree-k cycles in the based basis: a based
/// injection maps to itself, a non-based one to the sum of the based faces of
/// its zero-extension (a one-step homotopy via the extra degeneracy).
F2Matrix based_reduction(int p, int k) {
    auto all = injections(p, k);
    auto based = based_injections(p, k);
    std::map<std::uint64_t, int> bidx;
    for (int i = 0; i < (int)based.size(); ++i) bidx[based[i].mask] = i;
    F2Matrix m(based.size(), all.size());
    for (int j = 0; j < (int)all.size(); ++j) {
        if (all[j].based()) {
            m.set(bidx[all[j].mask], j);
        } else {
            Injection z = all[j].adjoin_zero();
            for (int f = 1; f <= k + 1; ++f) m.flip(bidx.at(z.face(f).mask), j);
        }
    }
    return m;
}

}  // namespace

Cosimplicial universal_homology(int r, int s, int t, int cap) {
    bool fin = (r != kInfRank);
    if (fin && r < 2) throw std::invalid_argument("universal_homology: needs r >= 2 or unbounded");
    if (cap < 0) throw std::invalid_argument("universal_homology: needs a cap");
    int qb = t;                       // bottom homology degree
    int qt = fin ? t + r - 1 : -1;    // top homology degree
    Cosimplicial H;
    H.cap = cap;
    H.level.resize(cap + 1);
    auto bot = [&](int p) { return based_injections(p, s); };
    auto top = [&](int p) { return fin ? based_injections(p, s + r) : std::vector<Injection>{}; };
    for (int p = 0; p <= cap; ++p) {
        std::vector<std::string> lb;
        for (auto& e : bot(p)) lb.push_back(e.label());
        if (!lb.empty()) H.level[p].basis[qb] = std::move(lb);
        std::vector<std::string> lt;
        for (auto& e : top(p)) lt.push_back(e.label());
        if (!lt.empty()) H.level[p].basis[qt] = std::move(lt);
    }
    H.coface.resize(cap);
    H.codegen.resize(cap);
    auto fill = [&](int p, int k, int q) {
        auto src = fin && q == qt ? top(p) : bot(p);
        auto tgt = fin && q == qt ? top(p + 1) : bot(p + 1);
        (void)k;
        std::map<std::uint64_t, int> tidx;
        for (int i = 0; i < (int)tgt.size(); ++i) tidx[tgt[i].mask] = i;
        // d^0 through the based reduction
        int kk = q == qt ? s + r : s;
        auto all_tgt = injections(p + 1, kk);
        std::map<std::uint64_t, int> aidx;
        for (int i = 0; i < (int)all_tgt.size(); ++i) aidx[all_tgt[i].mask] = i;
        F2Matrix red = based_reduction(p + 1, kk);
        F2Matrix d0(tgt.size(), src.size());
        for (int j = 0; j < (int)src.size(); ++j) {
            Injection e = src[j].coface(0);
            F2Vec v(all_tgt.size());
            v.set(aidx.at(e.mask));
            F2Vec w = red.apply(v);
            for (auto i : w.support()) d0.flip((std::size_t)i, j);
        }
        H.coface[p][0].deg[q] = std::move(d0);
        for (int i = 1; i <= p + 1; ++i) {
            F2Matrix m(tgt.size(), src.size());
            for (int j = 0; j < (int)src.size(); ++j)
                m.set(tidx.at(src[j].coface(i).mask), j);
            H.coface[p][i].deg[q] = std::move(m);
        }
    };
    for (int p = 0; p < cap; ++p) {
        H.coface[p].resize(p + 2);
        H.codegen[p].resize(p + 1);
        if (!bot(p).empty()) fill(p, s, qb);
        if (fin && !top(p).empty()) fill(p, s + r, qt);
        auto fill_s = [&](int q, int kk) {
            auto src = (fin && q == qt) ? top(p + 1) : bot(p + 1);
            auto tgt = (fin && q == qt) ? top(p) : bot(p);
            (void)kk;
            std::map<std::uint64_t, int> tidx;
            for (int i = 0; i < (int)tgt.size(); ++i) tidx[tgt[i].mask] = i;
            for (int i = 0; i <= p; ++i) {
                F2Matrix m(tgt.size(), src.size());
                for (int j = 0; j < (int)src.size(); ++j) {
                    auto se = src[j].codegen(i);
                    if (se) m.set(tidx.at(se->mask), j);
                }
                H.codegen[p][i].deg[q] = std::move(m);
            }
        };
        if (!bot(p + 1).empty()) fill_s(qb, s);
        if (fin && !top(p + 1).empty()) fill_s(qt, s + r);
    }
    return H;
}

}  // namespace specseq
