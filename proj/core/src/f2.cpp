#include "specseq/f2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace specseq {

F2Vec& F2Vec::operator^=(const F2Vec& o) {
    if (n_ != o.n_) throw std::invalid_argument("F2Vec xor: size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool F2Vec::is_zero() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

std::size_t F2Vec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::vector<std::size_t> F2Vec::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t w = w_[i];
        while (w) {
            s.push_back(64 * i + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return s;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vec>& rows, std::size_t cols) {
    F2Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

F2Vec F2Matrix::row(std::size_t i) const {
    F2Vec v(cols_);
    for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = data_[i * wpr_ + k];
    return v;
}

void F2Matrix::set_row(std::size_t i, const F2Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
    for (std::size_t k = 0; k < wpr_; ++k) data_[i * wpr_ + k] = v.words()[k];
}

void F2Matrix::xor_row_into(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * wpr_;
    const std::uint64_t* s = data_.data() + src * wpr_;
    for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < wpr_; ++k)
        std::swap(data_[a * wpr_ + k], data_[b * wpr_ + k]);
}

bool F2Matrix::operator==(const F2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool F2Matrix::is_zero() const {
    for (auto w : data_)
        if (w) return false;
    return true;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = data_[i * wpr_ + k];
            while (w) {
                std::size_t j = 64 * k + std::countr_zero(w);
                t.set(j, i);
                w &= w - 1;
            }
        }
    return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("F2Matrix mul: shape mismatch");
    F2Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t* dst = r.data_.data() + i * r.wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = data_[i * wpr_ + k];
            while (w) {
                std::size_t j = 64 * k + std::countr_zero(w);
                const std::uint64_t* src = o.data_.data() + j * o.wpr_;
                for (std::size_t t = 0; t < o.wpr_; ++t) dst[t] ^= src[t];
                w &= w - 1;
            }
        }
    }
    return r;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("F2Matrix add: shape mismatch");
    F2Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] ^= o.data_[i];
    return r;
}

F2Vec F2Matrix::apply(const F2Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    F2Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint64_t* rw = data_.data() + i * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) acc ^= rw[k] & v.words()[k];
        if (std::popcount(acc) & 1) r.set(i);
    }
    return r;
}

F2Vec F2Matrix::apply_row(const F2Vec& v) const {
    if (v.size() != rows_) throw std::invalid_argument("apply_row: size mismatch");
    F2Vec r(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (v.get(i))
            for (std::size_t k = 0; k < wpr_; ++k) r.words()[k] ^= data_[i * wpr_ + k];
    return r;
}

F2Matrix F2Matrix::vstack(const F2Matrix& top, const F2Matrix& bottom) {
    if (top.cols_ != bottom.cols_ && top.rows_ != 0 && bottom.rows_ != 0)
        throw std::invalid_argument("vstack: column mismatch");
    std::size_t cols = top.rows_ ? top.cols_ : bottom.cols_;
    F2Matrix r(top.rows_ + bottom.rows_, cols);
    for (std::size_t i = 0; i < top.rows_; ++i) r.set_row(i, top.row(i));
    for (std::size_t i = 0; i < bottom.rows_; ++i) r.set_row(top.rows_ + i, bottom.row(i));
    return r;
}

std::string F2Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << (get(i, j) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

RankProfile rank_profile(const F2Matrix& m) {
    RankProfile rp;
    rp.reduced = m;
    F2Matrix& a = rp.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && !a.get(piv, c)) ++piv;
        if (piv == m.rows()) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row_into(i, r);
        rp.pivots.push_back(c);
        ++r;
    }
    rp.rank = r;
    return rp;
}

std::size_t rank(const F2Matrix& m) { return rank_profile(m).rank; }

F2Matrix kernel_basis(const F2Matrix& m) {
    RankProfile rp = rank_profile(m);
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<std::size_t> pivot_row(m.cols(), 0);
    for (std::size_t r = 0; r < rp.rank; ++r) {
        is_pivot[rp.pivots[r]] = true;
        pivot_row[rp.pivots[r]] = r;
    }
    F2Matrix k(m.cols() - rp.rank, m.cols());
    std::size_t kr = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        k.set(kr, c);
        for (std::size_t p = 0; p < m.cols(); ++p)
            if (is_pivot[p] && rp.reduced.get(pivot_row[p], c)) k.set(kr, p);
        ++kr;
    }
    return k;
}

std::optional<F2Vec> solve(const F2Matrix& m, const F2Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    // Row-reduce [m | b].
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        F2Vec r(m.cols() + 1);
        F2Vec mr = m.row(i);
        for (std::size_t k = 0; k < mr.words().size(); ++k) r.words()[k] = mr.words()[k];
        if (b.get(i)) r.set(m.cols());
        aug.set_row(i, r);
    }
    RankProfile rp = rank_profile(aug);
    F2Vec x(m.cols());
    for (std::size_t r = 0; r < rp.rank; ++r) {
        std::size_t c = rp.pivots[r];
        if (c == m.cols()) return std::nullopt;  // inconsistent
        if (rp.reduced.get(r, m.cols())) x.set(c);
    }
    return x;
}

std::optional<F2Matrix> inverse(const F2Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = m.rows();
    F2Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (m.get(i, j)) aug.set(i, j);
        aug.set(i, n + i);
    }
    RankProfile rp = rank_profile(aug);
    if (rp.rank != n || rp.pivots[n - 1] != n - 1) return std::nullopt;
    F2Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rp.reduced.get(i, n + j)) inv.set(i, j);
    return inv;
}

bool in_row_space(const F2Matrix& rows, const F2Vec& v) {
    if (v.is_zero()) return true;
    RankProfile rp = rank_profile(rows);
    F2Vec x = v;
    for (std::size_t r = 0; r < rp.rank; ++r)
        if (x.get(rp.pivots[r])) x ^= rp.reduced.row(r);
    return x.is_zero();
}

bool rows_contained(const F2Matrix& rows, const F2Matrix& sub) {
    RankProfile rp = rank_profile(rows);
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        F2Vec x = sub.row(i);
        for (std::size_t r = 0; r < rp.rank; ++r)
            if (x.get(rp.pivots[r])) x ^= rp.reduced.row(r);
        if (!x.is_zero()) return false;
    }
    return true;
}

Subquotient subquotient(const F2Matrix& num, const F2Matrix& den) {
    if (num.rows() && den.rows() && num.cols() != den.cols())
        throw std::invalid_argument("subquotient: ambient mismatch");
    if (!rows_contained(num, den))
        throw std::invalid_argument("subquotient: denominator escapes numerator");
    RankProfile dp = rank_profile(den);
    // Reduce numerator rows modulo the denominator span, then row-reduce.
    F2Matrix red(num.rows(), num.cols());
    for (std::size_t i = 0; i < num.rows(); ++i) {
        F2Vec x = num.row(i);
        for (std::size_t r = 0; r < dp.rank; ++r)
            if (x.get(dp.pivots[r])) x ^= dp.reduced.row(r);
        red.set_row(i, x);
    }
    RankProfile rp = rank_profile(red);
    Subquotient sq;
    sq.dim = rp.rank;
    sq.reps = F2Matrix(rp.rank, num.cols());
    for (std::size_t r = 0; r < rp.rank; ++r) sq.reps.set_row(r, rp.reduced.row(r));
    return sq;
}

}  // namespace specseq
