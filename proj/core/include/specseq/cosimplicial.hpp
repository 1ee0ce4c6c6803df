#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "specseq/chain.hpp"
#include "specseq/f2.hpp"

namespace specseq {

/// Sentinel for an unbounded weight parameter.
inline constexpr int kInfRank = std::numeric_limits<int>::max();

/// Map of chain complexes given degreewise; absent degrees are zero.
struct GradedMap {
    std::map<int, F2Matrix> deg;

    /// Matrix with the correct shape (zero when absent).
    F2Matrix at(int q, const ChainComplex& src, const ChainComplex& tgt) const;
};

/// Cosimplicial chain complex truncated at level `cap`: levels 0..cap,
/// cofaces coface[p][i] : level p -> level p+1 for 0 <= i <= p+1, and
/// codegeneracies codegen[p][i] : level p+1 -> level p for 0 <= i <= p.
struct Cosimplicial {
    int cap = -1;
    std::vector<ChainComplex> level;
    std::vector<std::vector<GradedMap>> coface;
    std::vector<std::vector<GradedMap>> codegen;

    F2Matrix d(int p, int i, int q) const {  // level p, degree q -> level p+1
        return coface[p][i].at(q, level[p], level[p + 1]);
    }
    F2Matrix s(int p, int i, int q) const {  // level p+1, degree q -> level p
        return codegen[p][i].at(q, level[p + 1], level[p]);
    }

    /// Checks shapes, the cosimplicial identities, and that every structure
    /// map is a chain map. Throws std::invalid_argument on failure.
    void validate() const;

    /// True when every coface d^i with i >= 1 sends basis elements to basis
    /// elements (at most one 1 per column). Such complexes admit the
    /// combinatorial conormalization fast path.
    bool monomial_above_zero() const;
};

/// Chain map X -> Y between cosimplicial chain complexes, given levelwise.
struct CosimplicialMap {
    std::vector<GradedMap> lvl;  // lvl[p] : X^p -> Y^p

    F2Matrix at(int p, int q, const Cosimplicial& x, const Cosimplicial& y) const {
        return lvl[p].at(q, x.level[p], y.level[p]);
    }
    /// Checks chain-map and cosimplicial-structure compatibility.
    void validate(const Cosimplicial& x, const Cosimplicial& y) const;
};

/// Universal example: level p is the (t-s)-fold suspension of the chains of
/// sk_{s+r-1}(Delta^p)/sk_{s-1}(Delta^p); pass r = kInfRank for the
/// unbounded version. Levels 0..cap; default cap is 2(s+r)+1 (finite r).
Cosimplicial universal_example(int r, int s, int t, int cap = -1);

/// Constant cosimplicial complex on a single generator in degree 0.
Cosimplicial constant_point(int cap);

Cosimplicial direct_sum(const Cosimplicial& a, const Cosimplicial& b);
/// Levelwise tensor product (X ⊗ Y)^p = X^p ⊗ Y^p with diagonal structure
/// maps. Basis at level p, degree q: pairs ordered by (left degree, left
/// index, right index).
Cosimplicial tensor(const Cosimplicial& a, const Cosimplicial& b);

/// Inclusion of / projection onto the first (or second) summand of
/// direct_sum(a, b).
CosimplicialMap sum_inclusion(const Cosimplicial& a, const Cosimplicial& b, int which);
CosimplicialMap sum_projection(const Cosimplicial& a, const Cosimplicial& b, int which);
/// Diagonal X -> X ⊕ X.
CosimplicialMap diagonal_map(const Cosimplicial& x);

/// Cosimplicial complex of levelwise homology of universal_example(r,s,0)
/// (suspension irrelevant up to shift; pass t for the shifted version).
/// Finite r: degrees t and t+r-1 per level; r = kInfRank: single degree t.
/// All differentials vanish; cofaces/codegens are the induced maps on
/// homology, with d^0 realized through the splitting-operator reduction.
Cosimplicial universal_homology(int r, int s, int t, int cap);

}  // namespace specseq
