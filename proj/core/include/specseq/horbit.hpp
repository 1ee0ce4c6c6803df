#pragma once

#include <array>
#include <map>

#include "specseq/bicomplex.hpp"
#include "specseq/cosimplicial.hpp"

namespace specseq {

/// Homotopy-orbit construction W ⊗_π (Y ⊗ Y) applied levelwise, with the
/// weight direction truncated at wcap. Basis at (level p, degree q):
/// e_i ⊗ a ⊗ b over all ordered pairs, i ascending then (qa, ia, ib).
/// d(e_i ⊗ n) = e_{i-1} ⊗ (1 + σ)n + e_i ⊗ ∂n.
struct HomotopyOrbit {
    Cosimplicial cx;
    int wcap = 0;
    struct Ent {
        int i, qa, ia, qb, ib;
    };
    std::map<std::pair<int, int>, std::vector<Ent>> ents;
    std::map<std::pair<int, int>, std::map<std::array<int, 5>, int>> idx;

    int index(int p, int q, int i, int qa, int ia, int qb, int ib) const;
};

HomotopyOrbit homotopy_orbit(const Cosimplicial& y, int wcap);

/// Map e(f) induced levelwise by a cosimplicial chain map (id ⊗ f ⊗ f).
CosimplicialMap homotopy_orbit_map(const CosimplicialMap& f, const Cosimplicial& x,
                                   const Cosimplicial& y, const HomotopyOrbit& hx,
                                   const HomotopyOrbit& hy);

/// W ⊗ X ⊗ Y without the π-quotient: basis (e_i or σe_i) ⊗ x ⊗ y; the flag
/// 1 marks the σ copy. d(e_i ⊗ n) = (e_{i-1} + σe_{i-1}) ⊗ n + e_i ⊗ ∂n.
struct WTensor {
    Cosimplicial cx;
    int wcap = 0;
    struct Ent {
        int i, flag, qa, ia, qb, ib;
    };
    std::map<std::pair<int, int>, std::vector<Ent>> ents;
    std::map<std::pair<int, int>, std::map<std::array<int, 6>, int>> idx;

    int index(int p, int q, int i, int flag, int qa, int ia, int qb, int ib) const;
};

WTensor w_tensor(const Cosimplicial& a, const Cosimplicial& b, int wcap);

/// External power-operation chain  q^m(c) = e_{m-k} ⊗ c ⊗ c + e_{m-k+1} ⊗ c ⊗ ∂c
/// for a degree-k chain c at level p (terms with negative weight index drop).
F2Vec q_chain(const HomotopyOrbit& ho, const Cosimplicial& y, int p, int k, int m,
              const F2Vec& c);

/// Levelwise homology of the homotopy orbit of a cosimplicial complex with
/// zero differentials (e.g. universal_homology output): basis families
/// e_i ⊗ x ⊗ x (all i) and e_0 ⊗ x ⊗ y for x < y, with the induced cofaces.
/// Its conormalization is the first page of the orbit spectral sequence.
struct MayoComplex {
    Cosimplicial cx;
    int wcap = 0;
    struct Diag {
        int i, qa, ia;
    };
    struct Off {
        int qa, ia, qb, ib;  // (qa, ia) < (qb, ib) lexicographically
    };
    std::map<std::pair<int, int>, std::vector<Diag>> diag;  // listed first
    std::map<std::pair<int, int>, std::vector<Off>> off;    // listed second
};

MayoComplex mayo_complex(const Cosimplicial& hd, int wcap);

/// Cochain complex concentrated in columns >= 0.
struct CochainComplex {
    std::map<int, int> dims;
    std::map<int, F2Matrix> delta;  // column p -> p+1
    std::map<int, std::vector<std::string>> labels;

    int dim(int p) const {
        auto it = dims.find(p);
        return it == dims.end() ? 0 : it->second;
    }
    F2Matrix d(int p) const;
    void validate() const;
};

std::map<int, HomologyEntry> cohomology(const CochainComplex& c);

/// Tensor square row of the bottom universal homology complexes:
/// Upsilon_{s,s'}^p has basis the covering ordered pairs of based injections,
/// with the conormalized d^0 ⊗ d^0 differential.
struct UpsilonComplex {
    int s = 0, s2 = 0;
    TensorConorm tc;     // single-row tensor conormalization
    CochainComplex cpx;  // extracted row

    F2Matrix swap(int p) const { return tc.swap_matrix(p, s + s2); }
};

UpsilonComplex upsilon(int s, int s2, int cap);

/// Unordered-pair quotient of Upsilon_{s,s}.
CochainComplex omega_bar(const UpsilonComplex& u);
/// Image rows of (1 + σ) with the induced differential.
CochainComplex symmetrized_subcomplex(const UpsilonComplex& u);
/// Kernel of (1 + σ) with the induced differential.
CochainComplex invariant_subcomplex(const UpsilonComplex& u);

}  // namespace specseq
