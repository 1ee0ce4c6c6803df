#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace specseq {

/// Bit vector over GF(2). Bits beyond size() are kept zero.
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    F2Vec& operator^=(const F2Vec& o);
    friend F2Vec operator^(F2Vec a, const F2Vec& b) { return a ^= b; }
    bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool is_zero() const;
    std::size_t popcount() const;
    std::vector<std::size_t> support() const;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense bit-packed matrix over GF(2), row major. Acts on column vectors:
/// a rows x cols matrix is a linear map F2^cols -> F2^rows.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(const std::vector<F2Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (data_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v = true) {
        if (v)
            data_[i * wpr_ + (j >> 6)] |= (std::uint64_t{1} << (j & 63));
        else
            data_[i * wpr_ + (j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
    }
    void flip(std::size_t i, std::size_t j) {
        data_[i * wpr_ + (j >> 6)] ^= (std::uint64_t{1} << (j & 63));
    }

    F2Vec row(std::size_t i) const;
    void set_row(std::size_t i, const F2Vec& v);
    void xor_row_into(std::size_t dst, std::size_t src);  // row[dst] ^= row[src]
    void swap_rows(std::size_t a, std::size_t b);

    bool operator==(const F2Matrix& o) const;
    bool is_zero() const;

    F2Matrix transposed() const;
    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix operator+(const F2Matrix& o) const;
    F2Vec apply(const F2Vec& v) const;           // column-vector action
    F2Vec apply_row(const F2Vec& v) const;       // row-vector action: v * M

    /// Stacks rows of both matrices (equal cols).
    static F2Matrix vstack(const F2Matrix& top, const F2Matrix& bottom);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RankProfile {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
    F2Matrix reduced;                 // row-reduced echelon form, same shape
};

RankProfile rank_profile(const F2Matrix& m);
std::size_t rank(const F2Matrix& m);

/// Rows of the result form a basis of { v : M v = 0 }.
F2Matrix kernel_basis(const F2Matrix& m);

/// Solves M x = b. Free variables are set to zero (pivot-canonical solution).
std::optional<F2Vec> solve(const F2Matrix& m, const F2Vec& b);

/// Inverse of a square invertible matrix; nullopt when singular.
std::optional<F2Matrix> inverse(const F2Matrix& m);

/// True when v lies in the row space of `rows`.
bool in_row_space(const F2Matrix& rows, const F2Vec& v);

/// True when every row of `sub` lies in the row space of `rows`.
bool rows_contained(const F2Matrix& rows, const F2Matrix& sub);

struct Subquotient {
    std::size_t dim = 0;
    F2Matrix reps;  // rows: elements of row-space(num) spanning the quotient
};

/// V/W for W <= V, both given by spanning rows in a common ambient space.
/// Throws std::invalid_argument when span(den) is not contained in span(num).
Subquotient subquotient(const F2Matrix& num, const F2Matrix& den);

}  // namespace specseq
