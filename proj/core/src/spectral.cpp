#include "specseq/spectral.hpp"

#include <stdexcept>

namespace specseq {

Window full_window(const Bicomplex& b) {
    Window w;
    w.plo = b.min_col();
    w.phi = b.max_col();
    bool any = false;
    for (auto& [pq, l] : b.basis) {
        (void)l;
        int n = pq.second - pq.first;
        if (!any) {
            w.nlo = w.nhi = n;
            any = true;
        } else {
            w.nlo = std::min(w.nlo, n);
            w.nhi = std::max(w.nhi, n);
        }
    }
    if (!any) {
        w.nlo = 0;
        w.nhi = -1;
    }
    // room for the empty flanking degrees used by boundary assembly
    w.nlo -= 1;
    w.nhi += 1;
    return w;
}

FilteredComplex::FilteredComplex(const Bicomplex& b, Window w, const FilteredExtra& x)
    : FilteredComplex(b, w) {
    x_ = &x;
}

FilteredComplex::FilteredComplex(const Bicomplex& b, Window w) : b_(&b), w_(w) {
    for (int n = w.nlo; n <= w.nhi; ++n) {
        auto& blks = blocks_[n];
        int dim = 0;
        for (int p = w.plo; p <= w.phi; ++p) {
            int d = b.dim(p, n + p);
            if (!d) continue;
            blks.push_back({p, dim});
            dim += d;
        }
        dims_[n] = dim;
    }
}

int FilteredComplex::ambient_dim(int n) const {
    auto it = dims_.find(n);
    return it == dims_.end() ? 0 : it->second;
}

const std::vector<std::pair<int, int>>& FilteredComplex::blocks(int n) const {
    static const std::vector<std::pair<int, int>> empty;
    auto it = blocks_.find(n);
    return it == blocks_.end() ? empty : it->second;
}

int FilteredComplex::offset(int n, int p) const {
    for (auto& [pp, o] : blocks(n))
        if (pp == p) return o;
    return -1;
}

int FilteredComplex::filtration_start(int n, int s) const {
    for (auto& [p, o] : blocks(n))
        if (p >= s) return o;
    return ambient_dim(n);
}

const F2Matrix& FilteredComplex::boundary(int n) const {
    auto it = bnd_.find(n);
    if (it != bnd_.end()) return it->second;
    F2Matrix d(ambient_dim(n - 1), ambient_dim(n));
    if (x_) {
        for (auto& [p, o] : blocks(n)) {
            int q = n + p;
            for (auto& [key, blk] : x_->jump) {
                auto [jp, jq, k] = key;
                if (jp != p || jq != q || p + k > w_.phi) continue;
                int to = offset(n - 1, p + k);
                if (to < 0) continue;
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    for (std::size_t r = 0; r < blk.rows(); ++r)
                        if (blk.get(r, c)) d.flip(to + (int)r, o + (int)c);
            }
        }
        return bnd_.emplace(n, std::move(d)).first->second;
    }
    for (auto& [p, o] : blocks(n)) {
        int q = n + p;
        F2Matrix v = b_->vertical(p, q);
        int vo = offset(n - 1, p);
        if (vo >= 0)
            for (std::size_t c = 0; c < v.cols(); ++c)
                for (std::size_t r = 0; r < v.rows(); ++r)
                    if (v.get(r, c)) d.flip(vo + (int)r, o + (int)c);
        if (p + 1 <= w_.phi) {
            F2Matrix h = b_->horizontal(p, q);
            int ho = offset(n - 1, p + 1);
            if (ho >= 0)
                for (std::size_t c = 0; c < h.cols(); ++c)
                    for (std::size_t r = 0; r < h.rows(); ++r)
                        if (h.get(r, c)) d.flip(ho + (int)r, o + (int)c);
        }
    }
    return bnd_.emplace(n, std::move(d)).first->second;
}

void SpectralSequence::require_window(int r, int s, int t) const {
    const Window& w = f_->window();
    const Bicomplex& b = f_->bicomplex();
    int n = t - s;
    // the computation touches columns [s-r+1, s+r] at total degrees n-1..n+1;
    // clamp the needs to the populated support, where absent blocks are zero
    bool any = false;
    int minn = 0, maxn = -1;
    for (auto& [pq, labels] : b.basis)
        if (!labels.empty()) {
            int d = pq.second - pq.first;
            if (!any || d < minn) minn = d;
            if (!any || d > maxn) maxn = d;
            any = true;
        }
    if (!any) return;
    int lo_need = std::max(b.min_col(), s - r + 1);
    int hi_need = std::min(b.max_col(), s + r);
    int dlo_need = std::max(n - 1, minn);
    int dhi_need = std::min(n + 1, maxn);
    bool cols_ok = lo_need > hi_need || (w.plo <= lo_need && w.phi >= hi_need);
    bool degs_ok = dlo_need > dhi_need || (w.nlo <= dlo_need && w.nhi >= dhi_need);
    if (!cols_ok || !degs_ok)
        throw std::out_of_range(
            "spectral window underflow: page (r=" + std::to_string(r) +
            ", s=" + std::to_string(s) + ", t=" + std::to_string(t) +
            ") needs columns [" + std::to_string(lo_need) + "," + std::to_string(hi_need) +
            "] and total degrees [" + std::to_string(n - 1) + "," + std::to_string(n + 1) + "]");
}

const F2Matrix& SpectralSequence::zspace(int r, int s, int t) {
    auto key = std::make_tuple(r, s, t);
    auto it = z_.find(key);
    if (it != z_.end()) return it->second;
    int n = t - s;
    int dim_n = f_->ambient_dim(n);
    int start = f_->filtration_start(n, s);
    int m = dim_n - start;
    F2Matrix out;
    if (m == 0 || r < 0) {
        out = F2Matrix(0, dim_n);
    } else if (r == 0) {
        out = F2Matrix(m, dim_n);
        for (int i = 0; i < m; ++i) out.set(i, start + i);
    } else {
        int tlo = f_->filtration_start(n - 1, s);
        int thi = f_->filtration_start(n - 1, s + r);
        const F2Matrix& bd = f_->boundary(n);
        F2Matrix a(thi - tlo, m);
        for (int c = 0; c < m; ++c)
            for (int rr = tlo; rr < thi; ++rr)
                if (bd.get(rr, start + c)) a.set(rr - tlo, c);
        F2Matrix ker = kernel_basis(a);
        out = F2Matrix(ker.rows(), dim_n);
        for (std::size_t i = 0; i < ker.rows(); ++i)
            for (int c = 0; c < m; ++c)
                if (ker.get(i, c)) out.set(i, start + c);
    }
    return z_.emplace(key, std::move(out)).first->second;
}

const SpectralSequence::Entry& SpectralSequence::entry(int r, int s, int t) {
    auto key = std::make_tuple(r, s, t);
    auto it = e_.find(key);
    if (it != e_.end()) return it->second;
    require_window(r, s, t);
    int n = t - s;
    Entry ent;
    if (r == 0) {
        const F2Matrix& z = zspace(0, s, t);
        const F2Matrix& z1 = zspace(0, s + 1, t + 1);
        Subquotient sq = subquotient(z, z1);
        ent.dim = sq.dim;
        ent.reps = sq.reps;
        ent.bspan = z1;
    } else {
        const F2Matrix& z = zspace(r, s, t);
        const F2Matrix& zin = zspace(r - 1, s - r + 1, t - r + 2);  // at degree n + 1
        F2Matrix b1((int)zin.rows(), f_->ambient_dim(n));
        const F2Matrix& bd = f_->boundary(n + 1);
        for (std::size_t i = 0; i < zin.rows(); ++i) b1.set_row(i, bd.apply(zin.row(i)));
        F2Matrix b = F2Matrix::vstack(b1, zspace(r - 1, s + 1, t + 1));
        Subquotient sq = subquotient(z, b);
        ent.dim = sq.dim;
        ent.reps = sq.reps;
        ent.bspan = std::move(b);
    }
    return e_.emplace(key, std::move(ent)).first->second;
}

F2Matrix SpectralSequence::differential(int r, int s, int t) {
    const Entry src = entry(r, s, t);
    const Entry& tgt = entry(r, s + r, t + r - 1);
    F2Matrix m(tgt.dim, src.dim);
    int n = t - s;
    const F2Matrix& bd = f_->boundary(n);
    for (std::size_t i = 0; i < src.dim; ++i) {
        F2Vec v = bd.apply(src.reps.row(i));
        auto c = class_coords(r, s + r, t + r - 1, v);
        if (!c) throw std::logic_error("differential: image escapes the target page");
        for (auto rr : c->support()) m.set(rr, i);
    }
    return m;
}

std::optional<F2Vec> SpectralSequence::class_coords(int r, int s, int t, const F2Vec& ambient) {
    const Entry& ent = entry(r, s, t);
    F2Matrix span = F2Matrix::vstack(ent.reps, ent.bspan);
    auto x = solve(span.transposed(), ambient);
    if (!x) return std::nullopt;
    F2Vec c(ent.dim);
    for (std::size_t i = 0; i < ent.dim; ++i)
        if (x->get(i)) c.set(i);
    return c;
}

int SpectralSequence::death_page(const F2Vec& x, int s, int t, int rstart, int rmax) {
    F2Vec cur = x;
    for (int r = rstart; r <= rmax; ++r) {
        const Entry& ent = entry(r, s, t);
        if (in_row_space(ent.bspan, cur)) return r;
        if (r == rmax) break;
        const F2Matrix& zn = zspace(r + 1, s, t);
        F2Matrix span = F2Matrix::vstack(zn, ent.bspan);
        auto y = solve(span.transposed(), cur);
        if (!y) return -(r + 1);
        F2Vec next(cur.size());
        for (std::size_t i = 0; i < zn.rows(); ++i)
            if (y->get(i)) next ^= zn.row(i);
        cur = next;
    }
    return rmax + 1;
}

namespace {

// kernel basis derived from an already-computed row reduction
F2Matrix kernel_from_profile(const RankProfile& rp, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    std::vector<std::size_t> pivot_row(cols, 0);
    for (std::size_t r = 0; r < rp.rank; ++r) {
        is_pivot[rp.pivots[r]] = true;
        pivot_row[rp.pivots[r]] = r;
    }
    F2Matrix k(cols - rp.rank, cols);
    std::size_t kr = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        k.set(kr, c);
        for (std::size_t p = 0; p < cols; ++p)
            if (is_pivot[p] && rp.reduced.get(pivot_row[p], c)) k.set(kr, p);
        ++kr;
    }
    return k;
}

}  // namespace

ReducedFiltration reduce_by_columns(const Bicomplex& b) {
    ReducedFiltration rf;
    struct Piece {
        F2Matrix iota;  // C_q x h: representatives of the vertical homology
        F2Matrix pi;    // h x C_q: projection onto those representatives
        F2Matrix hom;   // C_{q+1} x C_q: vertical contraction, dh + hd = 1 + iota pi
    };
    std::map<std::pair<int, int>, Piece> pieces;
    std::map<std::pair<int, int>, RankProfile> prof;
    auto profile = [&](int p, int q) -> const RankProfile& {
        auto key = std::make_pair(p, q);
        auto it = prof.find(key);
        if (it != prof.end()) return it->second;
        return prof.emplace(key, rank_profile(b.vertical(p, q))).first->second;
    };
    for (auto& [pq, labels] : b.basis) {
        if (labels.empty()) continue;
        auto [p, q] = pq;
        int nq = (int)labels.size();
        const RankProfile& rpv = profile(p, q);
        const RankProfile& rpu = profile(p, q + 1);
        F2Matrix Z = kernel_from_profile(rpv, nq);
        F2Matrix Vup = b.vertical(p, q + 1);
        Subquotient sq = subquotient(Z, Vup.transposed());
        int rb = (int)rpu.rank, hdim = (int)sq.dim, ra = (int)rpv.rank;
        if (rb + hdim + ra != nq)
            throw std::logic_error("reduce_by_columns: decomposition dimension mismatch");
        // basis of C_q: images of the pivot columns of the incoming vertical,
        // then homology representatives, then the pivot coordinates of the
        // outgoing vertical (mapped isomorphically onto its image)
        F2Matrix M(nq, nq);
        for (int i = 0; i < rb; ++i) {
            std::size_t j = rpu.pivots[i];
            for (std::size_t r = 0; r < Vup.rows(); ++r)
                if (Vup.get(r, j)) M.set(i, r);
        }
        for (int i = 0; i < hdim; ++i) M.set_row(rb + i, sq.reps.row(i));
        for (int i = 0; i < ra; ++i) M.set(rb + hdim + i, rpv.pivots[i]);
        auto inv = inverse(M.transposed());
        if (!inv) throw std::logic_error("reduce_by_columns: decomposition is not a basis");
        Piece pc;
        pc.iota = sq.reps.transposed();
        pc.pi = F2Matrix(hdim, nq);
        for (int i = 0; i < hdim; ++i) pc.pi.set_row(i, inv->row(rb + i));
        pc.hom = F2Matrix(b.dim(p, q + 1), nq);
        for (int i = 0; i < rb; ++i) pc.hom.set_row(rpu.pivots[i], inv->row(i));
        if (hdim) {
            std::vector<std::string> hl;
            for (int i = 0; i < hdim; ++i)
                hl.push_back("h" + std::to_string(p) + ":" + std::to_string(q) + ":" +
                             std::to_string(i));
            rf.shell.basis[{p, q}] = std::move(hl);
        }
        pieces.emplace(pq, std::move(pc));
    }
    // transport the horizontal differential through the contraction:
    // D = pi (dh + dh hom dh + ...) iota, one march per homology class
    for (auto& [pq, pc] : pieces) {
        auto [p, q0] = pq;
        int hdim = (int)pc.iota.cols();
        for (int i = 0; i < hdim; ++i) {
            int c = p, q = q0;
            F2Vec v((std::size_t)b.dim(p, q0));
            for (std::size_t r = 0; r < pc.iota.rows(); ++r)
                if (pc.iota.get(r, (std::size_t)i)) v.set(r);
            while (b.dim(c + 1, q)) {
                F2Vec v1 = b.horizontal(c, q).apply(v);
                if (v1.is_zero()) break;
                auto itn = pieces.find({c + 1, q});
                if (itn == pieces.end()) break;
                Piece& np = itn->second;
                if (np.iota.cols()) {
                    F2Vec cls = np.pi.apply(v1);
                    if (!cls.is_zero()) {
                        auto& blk = rf.extra.jump[{p, q0, c + 1 - p}];
                        if (!blk.rows() && !blk.cols())
                            blk = F2Matrix(np.iota.cols(), (std::size_t)hdim);
                        for (auto rr : cls.support()) blk.set(rr, (std::size_t)i);
                    }
                }
                F2Vec v2 = np.hom.apply(v1);
                if (v2.is_zero()) break;
                v = std::move(v2);
                ++c;
                ++q;
            }
        }
    }
    return rf;
}

F2Matrix assemble_map(const BicomplexMap& f, const FilteredComplex& src,
                      const FilteredComplex& tgt, int n) {
    F2Matrix m(tgt.ambient_dim(n), src.ambient_dim(n));
    for (auto& [p, o] : src.blocks(n)) {
        int q = n + p;
        F2Matrix fb = f.at(p, q, src.bicomplex(), tgt.bicomplex());
        int to = tgt.offset(n, p);
        if (to < 0) continue;
        for (std::size_t c = 0; c < fb.cols(); ++c)
            for (std::size_t r = 0; r < fb.rows(); ++r)
                if (fb.get(r, c)) m.flip(to + (int)r, o + (int)c);
    }
    return m;
}

F2Matrix induced_page_map(const BicomplexMap& f, SpectralSequence& src, SpectralSequence& tgt,
                          int r, int s, int t) {
    const SpectralSequence::Entry se = src.entry(r, s, t);
    const SpectralSequence::Entry& te = tgt.entry(r, s, t);
    int n = t - s;
    F2Matrix fm = assemble_map(f, src.complex(), tgt.complex(), n);
    F2Matrix m(te.dim, se.dim);
    for (std::size_t i = 0; i < se.dim; ++i) {
        F2Vec v = fm.apply(se.reps.row(i));
        auto c = tgt.class_coords(r, s, t, v);
        if (!c) throw std::logic_error("induced_page_map: image escapes the target page");
        for (auto rr : c->support()) m.set(rr, i);
    }
    return m;
}

}  // namespace specseq
