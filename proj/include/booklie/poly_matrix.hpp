#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "booklie/poly.hpp"

namespace booklie {

/// Dense matrix of polynomials, sized for the 3x3 / 9x9 / 27x27 objects
/// of the r-matrix layer. Kronecker products use the row-major block
/// convention: block (i,j) of A (x) B is A(i,j) * B.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        check_same_shape(a, b);
        PolyMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        check_same_shape(a, b);
        PolyMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: dimension mismatch in product");
        PolyMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Poly& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Poly& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend PolyMatrix operator*(const Poly& s, const PolyMatrix& m) {
        PolyMatrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = s * m.e_[i];
        return r;
    }

    static PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const Poly& aij = a.at(i, j);
                if (aij.is_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l) {
                        const Poly& bkl = b.at(k, l);
                        if (bkl.is_zero()) continue;
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                    }
            }
        return r;
    }

    static PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.rows_ != a.cols_ || b.rows_ != b.cols_ || a.rows_ != b.rows_)
            throw std::invalid_argument("PolyMatrix: commutator needs equal square matrices");
        return a * b - b * a;
    }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// First nonzero entry in row-major order, for failure reports.
    std::optional<std::tuple<std::size_t, std::size_t, Poly>> first_nonzero() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) return std::make_tuple(i, j, at(i, j));
        return std::nullopt;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    static void check_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("PolyMatrix: shape mismatch");
    }

    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<Poly> e_;
};

}  // namespace booklie
