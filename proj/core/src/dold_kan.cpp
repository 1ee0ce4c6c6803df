#include "specseq/dold_kan.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace specseq {

F2Matrix normalized_section(const Cosimplicial& y, const Conormalization& cy, int k, int q) {
    int n = y.level[k].dim(q);
    int nc = cy.cx.dim(k, q);
    if (k == 0) return F2Matrix::identity(n);
    // ∩_{i<k} ker s^i
    F2Matrix stacked(0, n);
    for (int i = 0; i < k; ++i) stacked = F2Matrix::vstack(stacked, y.s(k - 1, i, q));
    F2Matrix ker = kernel_basis(stacked);
    if ((int)ker.rows() != nc)
        throw std::logic_error("dold-kan: normalized kernel dimension mismatch");
    // rows of proj applied to the kernel basis
    auto itp = cy.proj.find({k, q});
    F2Matrix proj = itp != cy.proj.end() ? itp->second : F2Matrix(nc, n);
    F2Matrix p_rows(nc, nc);
    for (int i = 0; i < nc; ++i) p_rows.set_row(i, proj.apply(ker.row(i)));
    auto alpha = inverse(p_rows.transposed());
    if (!alpha) throw std::logic_error("dold-kan: kernel does not project isomorphically");
    return ker.transposed() * *alpha;  // columns: class representatives in Y^k_q
}

const F2Matrix& DoldKanCtx::nu(int k, int q) {
    auto key = std::make_pair(k, q);
    auto it = nu_.find(key);
    if (it != nu_.end()) return it->second;
    return nu_.emplace(key, normalized_section(*y_, *cy_, k, q)).first->second;
}

const F2Matrix& DoldKanCtx::vecs(int level, std::uint64_t mask, int q) {
    auto key = std::make_tuple(level, mask, q);
    auto it = vecs_.find(key);
    if (it != vecs_.end()) return it->second;
    int k = std::popcount(mask) - 1;
    F2Matrix result;
    if (k == level) {
        result = nu(k, q);
    } else {
        // drop the largest missing point via d^j
        std::uint64_t full = (std::uint64_t{1} << (level + 1)) - 1;
        std::uint64_t missing = full & ~mask;
        int j = 63 - std::countl_zero(missing);
        std::uint64_t low = mask & ((std::uint64_t{1} << j) - 1);
        std::uint64_t high = (mask >> (j + 1)) << j;
        result = y_->d(level - 1, j, q) * vecs(level - 1, low | high, q);
    }
    return vecs_.emplace(key, std::move(result)).first->second;
}

const std::vector<DoldKanCtx::ColBlock>& DoldKanCtx::columns(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = cols_.find(key);
    if (it != cols_.end()) return it->second;
    std::vector<ColBlock> cb;
    for (int k = 0; k <= p; ++k) {
        int nc = cy_->cx.dim(k, q);
        if (!nc) continue;
        // only based injections (0 in the image): the decomposition runs over
        // composites of the cofaces d^i with i >= 1
        std::uint64_t full = (std::uint64_t{1} << (p + 1)) - 1;
        for (std::uint64_t m = 1; m <= full; m += 2) {
            if (std::popcount(m) == k + 1) cb.push_back({k, m, nc});
            if (m == full) break;
        }
    }
    return cols_.emplace(key, std::move(cb)).first->second;
}

const F2Matrix& DoldKanCtx::phi(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = phi_.find(key);
    if (it != phi_.end()) return it->second;
    int n = y_->level[p].dim(q);
    auto& cb = columns(p, q);
    int total = 0;
    for (auto& b : cb) total += b.ncols;
    if (total != n) throw std::logic_error("dold-kan: decomposition dimension mismatch");
    F2Matrix m(n, n);
    int off = 0;
    for (auto& b : cb) {
        const F2Matrix& v = vecs(p, b.mask, q);
        for (int c = 0; c < b.ncols; ++c)
            for (std::size_t r = 0; r < v.rows(); ++r)
                if (v.get(r, c)) m.set(r, off + c);
        off += b.ncols;
    }
    return phi_.emplace(key, std::move(m)).first->second;
}

const F2Matrix& DoldKanCtx::phi_inv(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = phi_inv_.find(key);
    if (it != phi_inv_.end()) return it->second;
    auto inv = inverse(phi(p, q));
    if (!inv) throw std::logic_error("dold-kan: phi is singular");
    return phi_inv_.emplace(key, std::move(*inv)).first->second;
}

CosimplicialMap dold_kan_lift(const BicomplexMap& g, DoldKanCtx& ctx_x, DoldKanCtx& ctx_y) {
    const Cosimplicial& x = ctx_x.complex();
    const Cosimplicial& y = ctx_y.complex();
    if (x.cap != y.cap) throw std::invalid_argument("dold_kan_lift: cap mismatch");
    CosimplicialMap G;
    G.lvl.resize(x.cap + 1);
    for (int p = 0; p <= x.cap; ++p) {
        std::set<int> qs;
        for (auto& [q, l] : x.level[p].basis) {
            (void)l;
            qs.insert(q);
        }
        for (auto& [q, l] : y.level[p].basis) {
            (void)l;
            qs.insert(q);
        }
        for (int q : qs) {
            int nx = x.level[p].dim(q), ny = y.level[p].dim(q);
            if (!nx || !ny) continue;
            auto& cbx = ctx_x.columns(p, q);
            auto& cby = ctx_y.columns(p, q);
            // block-diagonal middle: for each η, the column-level map g^{k}_q
            F2Matrix mid(ny, nx);
            int xoff = 0;
            for (auto& bx : cbx) {
                // find the matching η block on the Y side
                int yoff = 0;
                bool found = false;
                for (auto& by : cby) {
                    if (by.k == bx.k && by.mask == bx.mask) {
                        F2Matrix gb = g.at(bx.k, q, ctx_x.conorm().cx, ctx_y.conorm().cx);
                        for (std::size_t c = 0; c < gb.cols(); ++c)
                            for (std::size_t r = 0; r < gb.rows(); ++r)
                                if (gb.get(r, c)) mid.set(yoff + (int)r, xoff + (int)c);
                        found = true;
                        break;
                    }
                    yoff += by.ncols;
                }
                (void)found;
                xoff += bx.ncols;
            }
            G.lvl[p].deg[q] = ctx_y.phi(p, q) * mid * ctx_x.phi_inv(p, q);
        }
    }
    return G;
}

}  // namespace specseq
