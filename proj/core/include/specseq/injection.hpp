#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace specseq {

/// Order-preserving injection [k] -> [p], stored as a (p+1)-bit image mask
/// (bit i set iff i is in the image). Injections with the same target are
/// totally ordered by plain integer comparison of the mask; this order is
/// preserved by every coface pushforward.
struct Injection {
    int p = 0;            // target is [0..p]
    std::uint64_t mask = 0;

    int degree() const;   // k, where the source is [0..k]
    bool based() const { return mask & 1; }  // 0 in the image
    bool is_identity() const;

    std::vector<int> image() const;
    static Injection from_image(int p, const std::vector<int>& img);

    /// Post-composition with the coface d^j : [p] -> [p+1] (skip j).
    Injection coface(int j) const;
    /// Post-composition with the codegeneracy s^j : [p+1] -> [p] (hit j twice);
    /// nullopt when the composite fails to be injective.
    std::optional<Injection> codegen(int j) const;
    /// Removes the i-th (0-based, increasing) image point: the i-th face.
    Injection face(int i) const;
    /// Adjoins 0 to the image; requires !based().
    Injection adjoin_zero() const;

    bool operator==(const Injection& o) const { return p == o.p && mask == o.mask; }
    bool operator<(const Injection& o) const { return mask < o.mask; }

    std::string label() const;  // e.g. "(0,2,3)"
};

/// All injections [k] -> [p] in increasing total order.
std::vector<Injection> injections(int p, int k);
/// All based injections [k] -> [p] (image containing 0) in increasing order.
std::vector<Injection> based_injections(int p, int k);

std::uint64_t binomial(int n, int k);

}  // namespace specseq
