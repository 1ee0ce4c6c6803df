#pragma once

#include <memory>
#include <optional>
#include <random>

#include "specseq/bicomplex.hpp"
#include "specseq/cosimplicial.hpp"
#include "specseq/dold_kan.hpp"
#include "specseq/horbit.hpp"
#include "specseq/spectral.hpp"

namespace specseq {

/// Normal-form page-r cycle: conormalized components y^{s+k} of internal
/// degree t+k per column, satisfying hd y^s = 0 and cd y^{p-1} = hd y^p for
/// s < p <= s+r-1 (columns past s+r-1 are an unconstrained tail).
struct RCycle {
    int r = 2, s = 0, t = 0;
    std::map<int, F2Vec> comp;  // column p -> coords in C(Y)^p at degree t + (p-s)

    F2Vec at(int p, const Bicomplex& cx) const;
};

void validate_rcycle(const RCycle& y, const Bicomplex& cx);

/// Ambient vector of the cycle in a filtered total complex at degree t - s.
F2Vec rcycle_ambient(const RCycle& y, const FilteredComplex& f);

/// Column decomposition of an ambient Z^r vector into a normal-form cycle.
RCycle rcycle_from_ambient(const F2Vec& v, int r, int s, int t, const FilteredComplex& f);

/// Fundamental cycle of the universal example: the sum of the identity
/// injections, one per column s..s+r-1 (all columns when r is unbounded).
RCycle iota(int r, int s, int t, const Conormalization& cd);

/// The map of conormalized complexes C(D_rst) -> C(Y) classifying an
/// r-cycle: the identity generator of column p goes to y^p and the unique
/// degree-lowered generator to cd y^{p-1}.
BicomplexMap representing_cmap(const RCycle& y, const Conormalization& cd,
                               const Conormalization& cy);

/// Everything needed to run the orbit spectral sequence of a host:
/// conormalization, conormalized orbit bicomplex, filtered total complex and
/// memoized pages. Not movable: internal pointers tie the members together.
struct OrbitPipeline {
    Cosimplicial y;
    Conormalization cy;
    OrbitConorm oc;
    std::unique_ptr<FilteredComplex> fc;
    std::unique_ptr<SpectralSequence> ss;

    OrbitPipeline(Cosimplicial host, int wcap, std::optional<Window> w = std::nullopt);
    OrbitPipeline(const OrbitPipeline&) = delete;
    OrbitPipeline& operator=(const OrbitPipeline&) = delete;
};

/// Host-side plain (non-orbit) spectral sequence bundle.
struct HostPipeline {
    Cosimplicial y;
    Conormalization cy;
    std::unique_ptr<FilteredComplex> fc;
    std::unique_ptr<SpectralSequence> ss;

    HostPipeline(Cosimplicial host, std::optional<Window> w = std::nullopt);
    HostPipeline(const HostPipeline&) = delete;
    HostPipeline& operator=(const HostPipeline&) = delete;
};

struct OpResult {
    int page = 0;    // page of the stated class
    int s = 0, t = 0;  // value lives in E^page_{-s,t}
    F2Vec rep;       // ambient representative in the orbit total complex
    F2Vec coords;    // class coordinates on that page
    bool zero = true;
};

/// External operations on an r-cycle of the host, evaluated through the
/// representing map of the universal example and its orbit spectral
/// sequence. Caches the universal-example pipeline across values of m.
class ExternalOpCtx {
public:
    ExternalOpCtx(const Cosimplicial& host, const Conormalization& cy, OrbitPipeline& oy,
                  const RCycle& ycycle);

    /// preQ^m in the vertical range, m >= t: value in E^r_{-s, m+t}.
    OpResult vertical(int m);
    /// preQ^m in the horizontal range, t-s <= m <= t: E^r_{m-s-t, 2t}.
    OpResult horizontal(int m);

    const CosimplicialMap& lift() const { return lift_; }
    OrbitPipeline& universal_pipeline() { return *od_; }
    SpectralSequence& host_pages() { return *oy_->ss; }

private:
    OpResult evaluate(int sx, int qx);

    const Cosimplicial* host_;
    OrbitPipeline* oy_;
    RCycle yc_;
    Cosimplicial d_;
    Conormalization cd_;
    CosimplicialMap lift_;
    std::unique_ptr<OrbitPipeline> od_;
    BicomplexMap ef_;
};

/// mu_r(x, y): image of x ⊗ y under Alexander–Whitney followed by the
/// e_0-inclusion, as a class in E^r_{-(sx+sy), tx+ty} of the orbit complex.
OpResult external_product(const RCycle& x, const RCycle& ycl, const Cosimplicial& host,
                          const Conormalization& cy, OrbitPipeline& oy);

/// Page on which the horizontal operation preQ^m of an E^r_{-s,t} class is
/// asserted to be well-defined.
int w_page(int r, int s, int t, int m);

/// Uniformly random element of Z^r_{-s,t} decomposed into a normal-form cycle.
RCycle random_rcycle(SpectralSequence& ss, const FilteredComplex& f, int r, int s, int t,
                     std::mt19937& rng);

}  // namespace specseq
