#pragma once

// Dense exact linear algebra over any of the library's field types.
// Elimination always scans columns left to right and rows top to bottom,
// so every computation is deterministic for a fixed input ordering.

#include <optional>
#include <stdexcept>
#include <vector>

namespace pearl {

template <class K>
class Mat {
    std::size_t r_ = 0, c_ = 0;
    std::vector<K> a_;

public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, K::zero()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = K::one();
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Mat transposed() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                m.at(j, i) = at(i, j);
        return m;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_)
            throw std::invalid_argument("matrix addition: shape mismatch");
        Mat s(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            s.a_[i] = a.a_[i] + b.a_[i];
        return s;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_)
            throw std::invalid_argument("matrix product: shape mismatch");
        Mat p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const K& x = a.at(i, k);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    const K& y = b.at(k, j);
                    if (!y.is_zero())
                        p.at(i, j) = p.at(i, j) + x * y;
                }
            }
        return p;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != c_)
            throw std::invalid_argument("matrix apply: shape mismatch");
        std::vector<K> w(r_, K::zero());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero())
                    w[i] = w[i] + at(i, j) * v[j];
        return w;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_)
            return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i]))
                return false;
        return true;
    }
};

namespace detail {

// In-place row echelon form; returns the pivot (row, col) list.
template <class K>
std::vector<std::pair<std::size_t, std::size_t>> echelonize(Mat<K>& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(row, j));
        K inv = K::one() / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero())
                continue;
            K f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <class K>
std::size_t rank(Mat<K> m) {
    return detail::echelonize(m).size();
}

// One exact solution of M x = b, or nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& m, const std::vector<K>& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    Mat<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = detail::echelonize(aug);
    for (auto& [r, c] : pivots)
        if (c == m.cols())
            return std::nullopt;
    std::vector<K> x(m.cols(), K::zero());
    for (auto& [r, c] : pivots)
        x[c] = aug.at(r, m.cols());
    return x;
}

template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
    std::size_t n = m.cols();
    auto pivots = detail::echelonize(m);
    std::vector<bool> is_pivot(n, false);
    for (auto& [r, c] : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<K> v(n, K::zero());
        v[free] = K::one();
        for (auto& [r, c] : pivots)
            v[c] = K::zero() - m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
    if (m.rows() != m.cols())
        return std::nullopt;
    std::size_t n = m.rows();
    Mat<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K::one();
    }
    auto pivots = detail::echelonize(aug);
    if (pivots.size() != n || pivots.back().second >= n)
        return std::nullopt;
    Mat<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

template <class K>
K det(Mat<K> m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: square matrix required");
    std::size_t n = m.rows();
    K d = K::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m.at(p, col).is_zero())
            ++p;
        if (p == n)
            return K::zero();
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(p, j), m.at(col, j));
            d = K::zero() - d;
        }
        d = d * m.at(col, col);
        K inv = K::one() / m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero())
                continue;
            K f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

// Dimension of the row span; rows may be any vectors of equal length.
template <class K>
std::size_t span_dim(const std::vector<std::vector<K>>& rows) {
    if (rows.empty())
        return 0;
    Mat<K> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = rows[i][j];
    return rank(std::move(m));
}

}  // namespace pearl
