#pragma once

#include <cstddef>
#include <vector>

#include "colorlie/scalars.hpp"

namespace colorlie {

/// Dense matrix over Q(zeta_n). Row-major; all entries share one order.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), order_(1) {}
    Matrix(size_t rows, size_t cols, unsigned order)
        : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CycScalar::zero(order)) {}

    static Matrix identity(size_t n, unsigned order);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    unsigned order() const { return order_; }

    CycScalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const CycScalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const CycScalar& s) const;

  private:
    size_t rows_, cols_;
    unsigned order_;
    std::vector<CycScalar> data_;
};

/// Exact rank via fraction-free (Bareiss-style) elimination; no tolerances.
size_t rank(Matrix m);

/// Basis of the right kernel {v : Mv = 0}, as columns returned row-wise
/// (each inner vector has m.cols() entries).
std::vector<std::vector<CycScalar>> kernel_basis(Matrix m);

/// One solution of Mx = b if the system is consistent.
std::optional<std::vector<CycScalar>> solve(Matrix m, std::vector<CycScalar> b);

/// Indices of `candidates` columns that enlarge the span of `base`.
/// Both are given as column vectors of length dim; used to lift quotient bases.
std::vector<size_t> independent_from(const std::vector<std::vector<CycScalar>>& base,
                                     const std::vector<std::vector<CycScalar>>& candidates,
                                     size_t dim, unsigned order);

}  // namespace colorlie
