#include "specseq/chain.hpp"

#include <stdexcept>

namespace specseq {

F2Matrix ChainComplex::boundary(int k) const {
    auto it = diff.find(k);
    if (it != diff.end()) return it->second;
    return F2Matrix(dim(k - 1), dim(k));
}

void ChainComplex::validate() const {
    for (auto& [k, m] : diff) {
        if ((int)m.cols() != dim(k) || (int)m.rows() != dim(k - 1))
            throw std::invalid_argument("ChainComplex: boundary shape mismatch at degree " +
                                        std::to_string(k));
    }
    for (auto& [k, labels] : basis) {
        if (dim(k - 1) > 0 && dim(k) > 0) {
            F2Matrix dd = boundary(k - 1) * boundary(k);
            if (!dd.is_zero())
                throw std::invalid_argument("ChainComplex: d∘d != 0 at degree " +
                                            std::to_string(k));
        }
        (void)labels;
    }
}

ChainComplex delta_chains(int p) {
    ChainComplex c;
    for (int k = 0; k <= p; ++k) {
        auto inj = injections(p, k);
        std::vector<std::string> labels;
        for (auto& e : inj) labels.push_back(e.label());
        c.basis[k] = std::move(labels);
    }
    // index lookup per degree
    std::map<int, std::map<std::uint64_t, int>> idx;
    for (int k = 0; k <= p; ++k) {
        auto inj = injections(p, k);
        for (int i = 0; i < (int)inj.size(); ++i) idx[k][inj[i].mask] = i;
    }
    for (int k = 1; k <= p; ++k) {
        auto inj = injections(p, k);
        F2Matrix d(c.dim(k - 1), c.dim(k));
        for (int j = 0; j < (int)inj.size(); ++j)
            for (int i = 0; i <= k; ++i) d.flip(idx[k - 1][inj[j].face(i).mask], j);
        c.diff[k] = std::move(d);
    }
    return c;
}

ChainComplex skeleton(const ChainComplex& c, int n) {
    ChainComplex s;
    for (auto& [k, labels] : c.basis)
        if (k <= n) s.basis[k] = labels;
    for (auto& [k, m] : c.diff)
        if (k <= n) s.diff[k] = m;
    return s;
}

ChainComplex quotient_below(const ChainComplex& c, int n) {
    ChainComplex q;
    for (auto& [k, labels] : c.basis)
        if (k >= n) q.basis[k] = labels;
    for (auto& [k, m] : c.diff)
        if (k >= n + 1) q.diff[k] = m;
    return q;
}

ChainComplex shift(const ChainComplex& c, int t) {
    ChainComplex s;
    for (auto& [k, labels] : c.basis) s.basis[k + t] = labels;
    for (auto& [k, m] : c.diff) s.diff[k + t] = m;
    return s;
}

std::map<int, HomologyEntry> homology(const ChainComplex& c) {
    std::map<int, HomologyEntry> h;
    for (auto& [k, labels] : c.basis) {
        (void)labels;
        F2Matrix cycles = (c.dim(k - 1) > 0) ? kernel_basis(c.boundary(k))
                                             : F2Matrix::identity(c.dim(k));
        F2Matrix bnd = c.boundary(k + 1).transposed();  // rows span the image
        Subquotient sq = subquotient(cycles, bnd);
        h[k] = HomologyEntry{sq.dim, sq.reps};
    }
    return h;
}

F2Matrix splitting_matrix(int p, int k) {
    auto src = injections(p, k);
    auto tgt = injections(p, k + 1);
    std::map<std::uint64_t, int> idx;
    for (int i = 0; i < (int)tgt.size(); ++i) idx[tgt[i].mask] = i;
    F2Matrix s(tgt.size(), src.size());
    for (int j = 0; j < (int)src.size(); ++j)
        if (!src[j].based()) s.set(idx[src[j].adjoin_zero().mask], j);
    return s;
}

}  // namespace specseq
