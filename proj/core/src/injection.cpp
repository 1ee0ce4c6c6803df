#include "specseq/injection.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace specseq {

int Injection::degree() const { return std::popcount(mask) - 1; }

bool Injection::is_identity() const {
    return mask == ((p >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (p + 1)) - 1));
}

std::vector<int> Injection::image() const {
    std::vector<int> img;
    std::uint64_t m = mask;
    while (m) {
        img.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return img;
}

Injection Injection::from_image(int p, const std::vector<int>& img) {
    Injection e{p, 0};
    for (int i : img) {
        if (i < 0 || i > p) throw std::invalid_argument("image point out of range");
        e.mask |= std::uint64_t{1} << i;
    }
    if ((int)std::popcount(e.mask) != (int)img.size())
        throw std::invalid_argument("repeated image point");
    return e;
}

Injection Injection::coface(int j) const {
    if (j < 0 || j > p + 1) throw std::invalid_argument("coface index out of range");
    std::uint64_t low = mask & ((std::uint64_t{1} << j) - 1);
    std::uint64_t high = (mask >> j) << (j + 1);
    return Injection{p + 1, low | high};
}

std::optional<Injection> Injection::codegen(int j) const {
    if (j < 0 || j > p - 1) throw std::invalid_argument("codegen index out of range");
    std::uint64_t bj = std::uint64_t{1} << j;
    if ((mask & bj) && (mask & (bj << 1))) return std::nullopt;  // j,j+1 collide
    std::uint64_t low = mask & (bj - 1);
    std::uint64_t high = (mask >> (j + 1)) << j;  // j+1..p slide down by one
    std::uint64_t merged = low | high;
    if (mask & bj) merged |= bj;
    return Injection{p - 1, merged};
}

Injection Injection::face(int i) const {
    std::vector<int> img = image();
    if (i < 0 || i >= (int)img.size()) throw std::invalid_argument("face index out of range");
    Injection e = *this;
    e.mask &= ~(std::uint64_t{1} << img[i]);
    return e;
}

Injection Injection::adjoin_zero() const {
    if (based()) throw std::invalid_argument("adjoin_zero: already based");
    return Injection{p, mask | 1};
}

std::string Injection::label() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int i : image()) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << ')';
    return os.str();
}

namespace {
void enumerate(int p, int k, std::uint64_t require_mask, std::vector<Injection>& out) {
    // All (k+1)-subsets of [0..p] containing require_mask, ascending as integers.
    std::vector<std::uint64_t> masks;
    std::uint64_t full = (p >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (p + 1)) - 1);
    for (std::uint64_t m = 0; m <= full; ++m) {
        if ((int)std::popcount(m) == k + 1 && (m & require_mask) == require_mask)
            masks.push_back(m);
        if (m == full) break;
    }
    for (auto m : masks) out.push_back(Injection{p, m});
}
}  // namespace

std::vector<Injection> injections(int p, int k) {
    std::vector<Injection> out;
    if (k < 0 || k > p) return out;
    enumerate(p, k, 0, out);
    return out;
}

std::vector<Injection> based_injections(int p, int k) {
    std::vector<Injection> out;
    if (k < 0 || k > p) return out;
    enumerate(p, k, 1, out);
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace specseq
