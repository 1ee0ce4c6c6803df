#pragma once

#include <cstdint>
#include <map>
#include <tuple>

#include "specseq/bicomplex.hpp"
#include "specseq/cosimplicial.hpp"

namespace specseq {

/// Levelwise basis change realizing the normalized-cochain decomposition
/// Y^p ≅ ⊕_{η:[k]↪[p]} η_*(∩_i ker s^i): phi(p, q) has one column block per
/// injection η, holding the coface-composite pushforward of the conormalized
/// classes at level k. Its inverse turns column-level data into levelwise
/// maps (dold_kan_lift below).
class DoldKanCtx {
public:
    DoldKanCtx(const Cosimplicial& y, const Conormalization& cy) : y_(&y), cy_(&cy) {}

    struct ColBlock {
        int k;
        std::uint64_t mask;  // image of η inside [0..p]
        int ncols;
    };

    const F2Matrix& phi(int p, int q);
    const F2Matrix& phi_inv(int p, int q);
    const std::vector<ColBlock>& columns(int p, int q);

    const Cosimplicial& complex() const { return *y_; }
    const Conormalization& conorm() const { return *cy_; }

private:
    const F2Matrix& nu(int k, int q);  // C^k_q -> Y^k_q landing in ∩ ker s^i
    const F2Matrix& vecs(int level, std::uint64_t mask, int q);

    const Cosimplicial* y_;
    const Conormalization* cy_;
    std::map<std::pair<int, int>, F2Matrix> phi_, phi_inv_;
    std::map<std::pair<int, int>, std::vector<ColBlock>> cols_;
    std::map<std::pair<int, int>, F2Matrix> nu_;
    std::map<std::tuple<int, std::uint64_t, int>, F2Matrix> vecs_;
};

/// Chain-level section C^k_q -> Y^k_q of the conormalization projection whose
/// image is the normalized subspace ∩_{i<k} ker s^i. Unlike the coordinate
/// section, it commutes with the internal boundary.
F2Matrix normalized_section(const Cosimplicial& y, const Conormalization& cy, int k, int q);

/// Unique cosimplicial chain map X -> Y inducing the given map of
/// conormalizations: G^p = phi_Y ∘ (⊕_η g^{k(η)}) ∘ phi_X^{-1}.
CosimplicialMap dold_kan_lift(const BicomplexMap& g, DoldKanCtx& ctx_x, DoldKanCtx& ctx_y);

}  // namespace specseq
