#pragma once

#include <map>
#include <tuple>

#include "specseq/bicomplex.hpp"

namespace specseq {

/// Column / total-degree window over which a filtered total complex is
/// materialized. Page computations check that the window is wide enough for
/// the requested (r, s, t) before trusting the truncation.
struct Window {
    int plo = 0, phi = -1, nlo = 0, nhi = -1;
};

/// Window covering every populated block of the bicomplex.
Window full_window(const Bicomplex& b);

/// Column-raising differential blocks for a filtered complex that is not a
/// plain bicomplex: jump[(p, q, k)] maps block (p, q) to (p + k, q + k - 1)
/// for k >= 1 (k = 1 plays the role of the horizontal differential).
struct FilteredExtra {
    std::map<std::tuple<int, int, int>, F2Matrix> jump;
};

/// Total complex of a column-filtered bicomplex over a window, with the
/// column filtration F^{-s} = (columns >= s). Total degree n collects the
/// blocks (p, n + p); the boundary is vertical + horizontal.
class FilteredComplex {
public:
    FilteredComplex(const Bicomplex& b, Window w);
    /// Same layout, but the boundary is assembled from explicit
    /// column-raising blocks instead of the bicomplex differentials.
    FilteredComplex(const Bicomplex& b, Window w, const FilteredExtra& x);

    const Window& window() const { return w_; }
    const Bicomplex& bicomplex() const { return *b_; }

    int ambient_dim(int n) const;
    /// Ordered list of (column p, offset) blocks at total degree n.
    const std::vector<std::pair<int, int>>& blocks(int n) const;
    int offset(int n, int p) const;  // -1 when the block is absent
    const F2Matrix& boundary(int n) const;  // C_n -> C_{n-1}

    /// First ambient index belonging to filtration F^{-s} (columns >= s).
    int filtration_start(int n, int s) const;

private:
    const Bicomplex* b_;
    const FilteredExtra* x_ = nullptr;
    Window w_;
    std::map<int, std::vector<std::pair<int, int>>> blocks_;
    std::map<int, int> dims_;
    mutable std::map<int, F2Matrix> bnd_;
};

/// Column-wise retraction of a bicomplex onto its vertical homology, with the
/// horizontal differential transported through the retraction homotopy. The
/// result is a filtered complex on a far smaller basis whose pages E_r agree
/// with those of the original for every r >= 1.
struct ReducedFiltration {
    Bicomplex shell;  // basis labels only; the differential lives in extra
    FilteredExtra extra;
};
ReducedFiltration reduce_by_columns(const Bicomplex& b);

/// Homology spectral sequence of the column filtration, computed windowed:
/// Z^r_{-s,t} = { x in F^{-s} C_{t-s} : dx in F^{-s-r} } and
/// E^r = Z^r / (d Z^{r-1}_{-s+r-1} + Z^{r-1}_{-s-1}). Entries are memoized.
class SpectralSequence {
public:
    explicit SpectralSequence(const FilteredComplex& f) : f_(&f) {}

    struct Entry {
        std::size_t dim = 0;
        F2Matrix reps;   // rows: ambient representatives at degree t - s
        F2Matrix bspan;  // rows spanning the boundary subspace B^r
    };

    const FilteredComplex& complex() const { return *f_; }

    /// Throws std::out_of_range when the window cannot certify (r, s, t).
    const Entry& entry(int r, int s, int t);

    /// Rows spanning Z^r_{-s,t} inside the ambient degree t - s.
    const F2Matrix& zspace(int r, int s, int t);

    /// d^r as a matrix E^r_{-s,t} -> E^r_{-s-r,t+r-1}.
    F2Matrix differential(int r, int s, int t);

    /// Coordinates of an ambient vector's class in E^r_{-s,t}; nullopt when
    /// the vector does not lie in Z^r + B^r.
    std::optional<F2Vec> class_coords(int r, int s, int t, const F2Vec& ambient);

    /// Follows the class of x (a cycle representative in Z^{rstart}) through
    /// the pages. Returns the first page on which the class vanishes, or
    /// rmax + 1 when it survives nonzero through rmax, or -(r+1) when a
    /// nonzero d^r obstructs lifting past page r.
    int death_page(const F2Vec& x, int s, int t, int rstart, int rmax);

private:
    void require_window(int r, int s, int t) const;

    const FilteredComplex* f_;
    std::map<std::tuple<int, int, int>, F2Matrix> z_;
    std::map<std::tuple<int, int, int>, Entry> e_;
};

/// Blockwise assembly of a bicomplex map at total degree n.
F2Matrix assemble_map(const BicomplexMap& f, const FilteredComplex& src,
                      const FilteredComplex& tgt, int n);

/// Matrix of the map induced on E^r_{-s,t} by a map of filtered bicomplexes.
F2Matrix induced_page_map(const BicomplexMap& f, SpectralSequence& src, SpectralSequence& tgt,
                          int r, int s, int t);

}  // namespace specseq
