#pragma once

#include <map>
#include <string>
#include <vector>

#include "specseq/f2.hpp"
#include "specseq/injection.hpp"

namespace specseq {

/// Non-negatively supported chain complex over GF(2) with labelled bases.
/// diff[k] is the boundary C_k -> C_{k-1} (columns index C_k, rows C_{k-1}).
struct ChainComplex {
    std::map<int, std::vector<std::string>> basis;
    std::map<int, F2Matrix> diff;

    int dim(int k) const {
        auto it = basis.find(k);
        return it == basis.end() ? 0 : (int)it->second.size();
    }
    int min_degree() const { return basis.empty() ? 0 : basis.begin()->first; }
    int max_degree() const { return basis.empty() ? -1 : basis.rbegin()->first; }

    /// Boundary matrix with correct shape even when absent (zero map).
    F2Matrix boundary(int k) const;

    /// Throws std::invalid_argument on shape errors or when d∘d != 0.
    void validate() const;
};

/// Simplicial chain complex of the standard p-simplex: degree k has one
/// generator per injection [k] -> [p].
ChainComplex delta_chains(int p);

/// Brutal truncation: keeps degrees <= n, drops everything above.
ChainComplex skeleton(const ChainComplex& c, int n);

/// Quotient complex c / skeleton(c, n-1): degrees >= n with the boundary
/// components below degree n dropped.
ChainComplex quotient_below(const ChainComplex& c, int n);

/// Degree shift: (shift(c, t))_k = c_{k-t}.
ChainComplex shift(const ChainComplex& c, int t);

struct HomologyEntry {
    std::size_t dim = 0;
    F2Matrix reps;  // rows: cycle representatives in the degree-k basis
};

/// H_k for every populated degree.
std::map<int, HomologyEntry> homology(const ChainComplex& c);

/// Extra-degeneracy splitting on delta_chains(p): adjoins 0 to the image when
/// absent, else 0. Returns the matrix Delta^p_k -> Delta^p_{k+1}.
F2Matrix splitting_matrix(int p, int k);

}  // namespace specseq
