#include "specseq/operations.hpp"

#include <stdexcept>

namespace specseq {

F2Vec RCycle::at(int p, const Bicomplex& cx) const {
    auto it = comp.find(p);
    if (it != comp.end()) return it->second;
    return F2Vec(cx.dim(p, t + p - s));
}

void validate_rcycle(const RCycle& y, const Bicomplex& cx) {
    for (auto& [p, v] : y.comp) {
        if (p < y.s) throw std::invalid_argument("rcycle: component below filtration column");
        if ((int)v.size() != cx.dim(p, y.t + p - y.s))
            throw std::invalid_argument("rcycle: component dimension mismatch at column " +
                                        std::to_string(p));
    }
    int top = (y.r == kInfRank) ? cx.max_col() : y.s + y.r - 1;
    if (!cx.vertical(y.s, y.t).apply(y.at(y.s, cx)).is_zero())
        throw std::invalid_argument("rcycle: bottom component is not a vertical cycle");
    for (int p = y.s + 1; p <= top; ++p) {
        int q = y.t + p - y.s;
        F2Vec lhs = cx.vertical(p, q).apply(y.at(p, cx));
        F2Vec rhs = cx.horizontal(p - 1, q - 1).apply(y.at(p - 1, cx));
        if (!(lhs == rhs))
            throw std::invalid_argument("rcycle: staircase relation fails at column " +
                                        std::to_string(p));
    }
}

F2Vec rcycle_ambient(const RCycle& y, const FilteredComplex& f) {
    int n = y.t - y.s;
    F2Vec v(f.ambient_dim(n));
    for (auto& [p, c] : y.comp) {
        int o = f.offset(n, p);
        if (o < 0) {
            if (!c.is_zero())
                throw std::invalid_argument("rcycle_ambient: nonzero component outside window");
            continue;
        }
        for (auto i : c.support()) v.set(o + i);
    }
    return v;
}

RCycle rcycle_from_ambient(const F2Vec& v, int r, int s, int t, const FilteredComplex& f) {
    RCycle y;
    y.r = r;
    y.s = s;
    y.t = t;
    int n = t - s;
    for (auto& [p, o] : f.blocks(n)) {
        int d = f.bicomplex().dim(p, n + p);
        F2Vec c(d);
        for (int i = 0; i < d; ++i)
            if (v.get(o + i)) c.set(i);
        if (!c.is_zero()) {
            if (p < s)
                throw std::invalid_argument("rcycle_from_ambient: support below column s");
            y.comp[p] = std::move(c);
        }
    }
    return y;
}

RCycle iota(int r, int s, int t, const Conormalization& cd) {
    RCycle y;
    y.r = r;
    y.s = s;
    y.t = t;
    int top = (r == kInfRank) ? cd.cx.max_col() : s + r - 1;
    for (int p = s; p <= top; ++p) {
        int q = t + p - s;
        auto it = cd.cx.basis.find({p, q});
        if (it == cd.cx.basis.end())
            throw std::invalid_argument("iota: missing column " + std::to_string(p));
        std::string idl = Injection{p, (p >= 63) ? ~std::uint64_t{0}
                                                 : ((std::uint64_t{1} << (p + 1)) - 1)}
                              .label();
        int ix = -1;
        for (int i = 0; i < (int)it->second.size(); ++i)
            if (it->second[i] == idl) ix = i;
        if (ix < 0) throw std::invalid_argument("iota: identity generator not found");
        F2Vec c((int)it->second.size());
        c.set(ix);
        y.comp[p] = std::move(c);
    }
    return y;
}

BicomplexMap representing_cmap(const RCycle& y, const Conormalization& cd,
                               const Conormalization& cy) {
    BicomplexMap m;
    for (auto& [pq, labels] : cd.cx.basis) {
        auto [p, q] = pq;
        F2Matrix blk(cy.cx.dim(p, q), (int)labels.size());
        std::string idl =
            Injection{p, (p >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (p + 1)) - 1)}
                .label();
        std::string d0l;
        {
            std::uint64_t mask = ((std::uint64_t{1} << (p + 1)) - 1) & ~std::uint64_t{1};
            d0l = Injection{p, mask}.label();
        }
        for (int j = 0; j < (int)labels.size(); ++j) {
            F2Vec val;
            if (labels[j] == idl) {
                if (q != y.t + p - y.s)
                    throw std::logic_error("representing_cmap: unexpected identity degree");
                val = y.at(p, cy.cx);
            } else if (labels[j] == d0l) {
                // degree-lowered generator: image of the previous component
                val = cy.cx.horizontal(p - 1, q).apply(y.at(p - 1, cy.cx));
            } else {
                throw std::logic_error("representing_cmap: unexpected surviving generator " +
                                       labels[j]);
            }
            for (auto i : val.support()) blk.set((int)i, j);
        }
        m.blocks[pq] = std::move(blk);
    }
    return m;
}

OrbitPipeline::OrbitPipeline(Cosimplicial host, int wcap, std::optional<Window> w)
    : y(std::move(host)), cy(conormalize(y)), oc(orbit_conorm(y, wcap)) {
    fc = std::make_unique<FilteredComplex>(oc.cx, w.value_or(full_window(oc.cx)));
    ss = std::make_unique<SpectralSequence>(*fc);
}

HostPipeline::HostPipeline(Cosimplicial host, std::optional<Window> w)
    : y(std::move(host)), cy(conormalize(y)) {
    fc = std::make_unique<FilteredComplex>(cy.cx, w.value_or(full_window(cy.cx)));
    ss = std::make_unique<SpectralSequence>(*fc);
}

ExternalOpCtx::ExternalOpCtx(const Cosimplicial& host, const Conormalization& cy,
                             OrbitPipeline& oy, const RCycle& ycycle)
    : host_(&host), oy_(&oy), yc_(ycycle) {
    validate_rcycle(yc_, cy.cx);
    d_ = universal_example(yc_.r, yc_.s, yc_.t, host.cap);
    cd_ = conormalize(d_);
    BicomplexMap cmap = representing_cmap(yc_, cd_, cy);
    DoldKanCtx ctxd(d_, cd_), ctxy(host, cy);
    lift_ = dold_kan_lift(cmap, ctxd, ctxy);
    od_ = std::make_unique<OrbitPipeline>(d_, oy.oc.wcap);
    ef_ = orbit_map(lift_, d_, host, od_->oc, oy_->oc);
}

OpResult ExternalOpCtx::evaluate(int sx, int qx) {
    int r = yc_.r;
    const SpectralSequence::Entry& ent = od_->ss->entry(r, sx, qx);
    if (ent.dim != 1)
        throw std::logic_error("external operation: universal class is not one-dimensional");
    F2Vec rep = ent.reps.row(0);
    int n = qx - sx;
    F2Matrix fm = assemble_map(ef_, *od_->fc, *oy_->fc, n);
    F2Vec v = fm.apply(rep);
    auto coords = oy_->ss->class_coords(r, sx, qx, v);
    if (!coords) throw std::logic_error("external operation: value escapes the target page");
    OpResult res;
    res.page = r;
    res.s = sx;
    res.t = qx;
    res.rep = std::move(v);
    res.coords = *coords;
    res.zero = res.coords.is_zero();
    return res;
}

OpResult ExternalOpCtx::vertical(int m) {
    if (m < yc_.t) throw std::invalid_argument("vertical operation needs m >= t");
    return evaluate(yc_.s, m + yc_.t);
}

OpResult ExternalOpCtx::horizontal(int m) {
    if (m < yc_.t - yc_.s || m > yc_.t)
        throw std::invalid_argument("horizontal operation needs t-s <= m <= t");
    return evaluate(yc_.s + yc_.t - m, 2 * yc_.t);
}

OpResult external_product(const RCycle& x, const RCycle& ycl, const Cosimplicial& host,
                          const Conormalization& cy, OrbitPipeline& oy) {
    if (x.r != ycl.r) throw std::invalid_argument("external_product: page mismatch");
    int r = x.r;
    int n = (x.t - x.s) + (ycl.t - ycl.s);
    BicomplexTensor tb = tensor_bicomplex(cy.cx, cy.cx);
    FilteredComplex ft(tb.cx, full_window(tb.cx));
    FilteredComplex ftc(oy.oc.tc.cx, full_window(oy.oc.tc.cx));
    BicomplexMap aw = alexander_whitney(host, host, cy, cy, tb, oy.oc.tc);
    BicomplexMap inc = orbit_e0_inclusion(oy.oc);
    F2Vec vec(ft.ambient_dim(n));
    for (auto& [px, cxv] : x.comp) {
        int qx = x.t + px - x.s;
        for (auto& [py, cyv] : ycl.comp) {
            int qy = ycl.t + py - ycl.s;
            int o = ft.offset(n, px + py);
            if (o < 0) continue;
            for (auto ia : cxv.support())
                for (auto ib : cyv.support()) {
                    int k = tb.index(cy.cx, cy.cx, px, qx, (int)ia, py, qy, (int)ib);
                    if (k >= 0) vec.flip(o + k);
                }
        }
    }
    F2Vec v1 = assemble_map(aw, ft, ftc, n).apply(vec);
    F2Vec v2 = assemble_map(inc, ftc, *oy.fc, n).apply(v1);
    int s = x.s + ycl.s, t = x.t + ycl.t;
    auto coords = oy.ss->class_coords(r, s, t, v2);
    if (!coords) throw std::logic_error("external_product: value escapes the target page");
    OpResult res;
    res.page = r;
    res.s = s;
    res.t = t;
    res.rep = std::move(v2);
    res.coords = *coords;
    res.zero = res.coords.is_zero();
    return res;
}

int w_page(int r, int s, int t, int m) {
    if (m < t - s || m > t) throw std::invalid_argument("w_page: m out of the horizontal range");
    if (m == t - s) return r;
    if (m <= t - r + 2) return 2 * r - 2;
    return r + t - m;
}

RCycle random_rcycle(SpectralSequence& ss, const FilteredComplex& f, int r, int s, int t,
                     std::mt19937& rng) {
    const F2Matrix& z = ss.zspace(r, s, t);
    if (!z.rows()) return rcycle_from_ambient(F2Vec(f.ambient_dim(t - s)), r, s, t, f);
    F2Vec v(z.cols());
    for (int attempt = 0; attempt < 8 && v.is_zero(); ++attempt) {
        v = F2Vec(z.cols());
        for (std::size_t i = 0; i < z.rows(); ++i)
            if (rng() & 1) v ^= z.row(i);
    }
    return rcycle_from_ambient(v, r, s, t, f);
}

}  // namespace specseq
