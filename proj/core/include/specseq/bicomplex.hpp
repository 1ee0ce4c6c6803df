#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "specseq/cosimplicial.hpp"
#include "specseq/f2.hpp"

namespace specseq {

/// First-quadrant bicomplex with commuting differentials (over GF(2)):
/// vertical (p,q) -> (p,q-1) and horizontal (p,q) -> (p+1,q). The column p
/// sits in filtration bidegree (-p, q).
struct Bicomplex {
    std::map<std::pair<int, int>, std::vector<std::string>> basis;
    std::map<std::pair<int, int>, F2Matrix> vert;
    std::map<std::pair<int, int>, F2Matrix> horiz;

    int dim(int p, int q) const {
        auto it = basis.find({p, q});
        return it == basis.end() ? 0 : (int)it->second.size();
    }
    F2Matrix vertical(int p, int q) const;    // (p,q) -> (p,q-1)
    F2Matrix horizontal(int p, int q) const;  // (p,q) -> (p+1,q)

    int min_col() const;
    int max_col() const;
    int min_deg() const;  // over all entries
    int max_deg() const;

    /// Shapes, v∘v = 0, h∘h = 0, v∘h = h∘v. Throws on failure.
    void validate() const;
};

/// Map of bicomplexes given blockwise; absent blocks are zero.
struct BicomplexMap {
    std::map<std::pair<int, int>, F2Matrix> blocks;

    F2Matrix at(int p, int q, const Bicomplex& src, const Bicomplex& tgt) const;
    /// Commutation with both differentials. Throws on failure.
    void validate(const Bicomplex& src, const Bicomplex& tgt) const;
};

BicomplexMap compose(const BicomplexMap& g, const BicomplexMap& f, const Bicomplex& src,
                     const Bicomplex& mid, const Bicomplex& tgt);

/// Conormalization of a cosimplicial chain complex: column p is the joint
/// cokernel of the cofaces d^1..d^p, realized on the complement of their
/// image row-echelon span (the complementary standard basis vectors).
struct Conormalization {
    Bicomplex cx;
    std::map<std::pair<int, int>, F2Matrix> proj;  // Y^p_q -> C^p_q
    std::map<std::pair<int, int>, F2Matrix> incl;  // C^p_q -> Y^p_q (section)
    std::map<std::pair<int, int>, std::vector<int>> surviving;  // chosen indices
};

Conormalization conormalize(const Cosimplicial& y);

/// Bicomplex map induced on conormalizations by a cosimplicial chain map.
BicomplexMap conormalized_map(const CosimplicialMap& f, const Cosimplicial& x,
                              const Cosimplicial& y, const Conormalization& cx,
                              const Conormalization& cy);

/// Conormalization of tensor(a, b) computed combinatorially, without
/// materializing the tensor levels. Requires both factors to be monomial
/// above coface index zero; the surviving basis is the set of pairs not
/// simultaneously hit by any d^k, k >= 1.
struct TensorConorm {
    Bicomplex cx;
    struct Pair {
        int qa, ia, qb, ib;
    };
    std::map<std::pair<int, int>, std::vector<Pair>> pairs;
    // lookup[(p, qa, qb)]: flat (ia * dim_b + ib) -> local index in (p, qa+qb), or -1
    std::map<std::tuple<int, int, int>, std::vector<int>> lookup;
    std::map<std::tuple<int, int, int>, int> strides_;  // right-factor dim per (p, qa, qb)

    /// Local index within block (p, qa+qb); -1 when the pair was conormalized away.
    int index(int p, int qa, int ia, int qb, int ib) const;
    /// Index of the swapped pair (requires equal factors).
    F2Matrix swap_matrix(int p, int q) const;
};

TensorConorm conormalized_tensor(const Cosimplicial& a, const Cosimplicial& b);

/// Conormalized chains of the homotopy-orbit construction on y, with the
/// weight direction truncated at wcap: basis e_i ⊗ (pair), 0 <= i <= wcap.
struct OrbitConorm {
    int wcap = 0;
    TensorConorm tc;
    Bicomplex cx;
    // offsets[(p,q)][i] = start of the e_i block; last entry = total dim
    std::map<std::pair<int, int>, std::vector<int>> offsets;

    int index(int p, int q, int i, int pair_local) const;
};

OrbitConorm orbit_conorm(const Cosimplicial& y, int wcap);

/// e_0-inclusion of the conormalized tensor into the orbit complex; a map of
/// bicomplexes because d(e_0) = 0.
BicomplexMap orbit_e0_inclusion(const OrbitConorm& oc);

/// Map induced on orbit complexes by a cosimplicial chain map f : X -> Y
/// (e_i ⊗ a ⊗ b goes to e_i ⊗ f(a) ⊗ f(b), conormalized).
BicomplexMap orbit_map(const CosimplicialMap& f, const Cosimplicial& x, const Cosimplicial& y,
                       const OrbitConorm& ox, const OrbitConorm& oy);

/// Tensor product of two bicomplexes; basis ordered by (pa, qa, ia, ib).
struct BicomplexTensor {
    Bicomplex cx;
    struct Block {
        int pa, qa, pb, qb, offset;
    };
    std::map<std::pair<int, int>, std::vector<Block>> blocks;

    int index(const Bicomplex& a, const Bicomplex& b, int pa, int qa, int ia, int pb, int qb,
              int ib) const;
};

BicomplexTensor tensor_bicomplex(const Bicomplex& a, const Bicomplex& b);

/// Alexander–Whitney map  C(X) ⊗ C(Y) -> C(X ⊗ Y): on a pair of columns
/// (i, j) applies the last j cofaces to the left factor and the first i
/// cofaces to the right factor.
BicomplexMap alexander_whitney(const Cosimplicial& x, const Cosimplicial& y,
                               const Conormalization& cx, const Conormalization& cy,
                               const BicomplexTensor& t, const TensorConorm& tc);

/// Shuffle map  C(X ⊗ Y) -> C(X) ⊗ C(Y): sum over (p,q)-shuffles of
/// codegeneracy composites, a section of alexander_whitney.
BicomplexMap shuffle(const Cosimplicial& x, const Cosimplicial& y, const Conormalization& cx,
                     const Conormalization& cy, const BicomplexTensor& t, const TensorConorm& tc);

/// Swap map on the conormalized tensor square as a bicomplex map.
BicomplexMap tensor_swap(const TensorConorm& tc);
/// Swap map on the bicomplex tensor square (a ⊗ b -> b ⊗ a, equal factors).
BicomplexMap bicomplex_tensor_swap(const Bicomplex& a, const BicomplexTensor& t);

/// Total complex over the given column window [plo, phi]: degree n collects
/// the blocks (p, n + p); boundary = vertical + horizontal (horizontal
/// escapes past phi are dropped).
ChainComplex total_complex(const Bicomplex& b, int plo, int phi, int nlo, int nhi);

}  // namespace specseq
