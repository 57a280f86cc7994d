#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qgr {

/// Enumerates k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Dense matrix over an arbitrary commutative ring T. T needs +, -, *,
/// unary -, and a zero/one supplied where required.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const T& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    Matrix operator+(const Matrix& o) const {
        check_shape(o.rows_, o.cols_);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_shape(o.rows_, o.cols_);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(rows_, o.cols_, data_.empty() ? T{} : zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        return r;
    }
    Matrix scale(const T& c) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = v * c;
        return r;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
        Matrix r(rs.size(), cs.size(), zero_like());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j)
                r.at(i, j) = at(rs[i], cs[j]);
        return r;
    }

    /// Cofactor determinant; fine up to 4x4 and for sparse symbolic entries.
    T det_cofactor(const T& zero) const {
        require_square();
        if (rows_ == 0) throw std::invalid_argument("det of empty matrix");
        if (rows_ == 1) return at(0, 0);
        T acc = zero;
        std::vector<int> cols(cols_);
        for (std::size_t j = 0; j < cols_; ++j) cols[j] = static_cast<int>(j);
        std::vector<int> rs(rows_ - 1);
        for (std::size_t i = 1; i < rows_; ++i) rs[i - 1] = static_cast<int>(i);
        for (std::size_t j = 0; j < cols_; ++j) {
            std::vector<int> cs;
            for (std::size_t c = 0; c < cols_; ++c)
                if (c != j) cs.push_back(static_cast<int>(c));
            T minor = submatrix(rs, cs).det_cofactor(zero);
            T term = at(0, j) * minor;
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

private:
    void require_square() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: not square");
    }
    void check_shape(std::size_t r, std::size_t c) const {
        if (rows_ != r || cols_ != c) throw std::invalid_argument("Matrix: shape mismatch");
    }
    T zero_like() const {
        if (data_.empty()) return T{};
        return data_[0] - data_[0];
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

/// Fraction-free Bareiss determinant; `divide(a, b)` must perform the exact
/// division that the algorithm guarantees to exist.
template <typename T>
T det_bareiss(Matrix<T> m, const T& one,
              const std::function<T(const T&, const T&)>& divide,
              const std::function<bool(const T&)>& is_zero_fn) {
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("det of empty matrix");
    T denom = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero_fn(m.at(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero_fn(m.at(p, k))) ++p;
            if (p == n) {
                // singular: determinant is zero
                return m.at(0, 0) - m.at(0, 0);
            }
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = divide(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), denom);
        denom = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return sign < 0 ? (d - d) - d : d;
}

/// k-th exterior power in the multiplicative sense: entry (A, B) is the
/// k-minor det M[A, B]; rows and columns indexed by lexicographic k-subsets.
template <typename T>
Matrix<T> exterior_minors(const Matrix<T>& m, int k, const T& zero) {
    auto subs = k_subsets(static_cast<int>(m.rows()), k);
    Matrix<T> r(subs.size(), subs.size(), zero);
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = 0; b < subs.size(); ++b)
            r.at(a, b) = m.submatrix(subs[a], subs[b]).det_cofactor(zero);
    return r;
}

/// k-th exterior power in the derivation (Leibniz) sense.
template <typename T>
Matrix<T> exterior_derivation(const Matrix<T>& m, int k, const T& zero) {
    const int n = static_cast<int>(m.rows());
    auto subs = k_subsets(n, k);
    std::vector<std::vector<int>> pos(1 << n, std::vector<int>{});
    auto key = [&](const std::vector<int>& s) {
        int mask = 0;
        for (int v : s) mask |= 1 << v;
        return mask;
    };
    std::vector<int> index_of(1 << n, -1);
    for (std::size_t i = 0; i < subs.size(); ++i) index_of[key(subs[i])] = static_cast<int>(i);

    Matrix<T> r(subs.size(), subs.size(), zero);
    for (std::size_t b = 0; b < subs.size(); ++b) {
        const auto& B = subs[b];
        for (int slot = 0; slot < k; ++slot) {
            for (int i = 0; i < n; ++i) {
                // replace B[slot] by i in the wedge, reorder with sign
                bool clash = false;
                for (int s2 = 0; s2 < k; ++s2)
                    if (s2 != slot && B[s2] == i) clash = true;
                if (clash) continue;
                std::vector<int> A = B;
                A[slot] = i;
                int sign = 1;
                // bubble into sorted position, each swap flips the sign
                for (int s2 = slot; s2 > 0 && A[s2] < A[s2 - 1]; --s2) {
                    std::swap(A[s2], A[s2 - 1]);
                    sign = -sign;
                }
                for (int s2 = slot; s2 + 1 < k && A[s2] > A[s2 + 1]; ++s2) {
                    std::swap(A[s2], A[s2 + 1]);
                    sign = -sign;
                }
                int a = index_of[key(A)];
                T term = m.at(i, B[slot]);
                r.at(a, b) = (sign > 0) ? r.at(a, b) + term : r.at(a, b) - term;
            }
        }
    }
    return r;
}

}  // namespace qgr
