#include "colorlie/linalg.hpp"

#include <stdexcept>

namespace colorlie {

Matrix Matrix::identity(size_t n, unsigned order) {
    Matrix m(n, n, order);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(order);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(rows_, o.cols_, order_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const CycScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const CycScalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator*(const CycScalar& s) const {
    Matrix r = *this;
    for (auto& e : r.data_) e *= s;
    return r;
}

namespace {

// Row echelon in place (fraction-free cross-multiplication with exact division
// by the previous pivot). Returns the pivot column per pivot row.
std::vector<size_t> echelon(Matrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    CycScalar prev = CycScalar::one(m.order());
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        const CycScalar pivot = m.at(row, col);
        for (size_t r = row + 1; r < m.rows(); ++r) {
            const CycScalar factor = m.at(r, col);
            if (factor.is_zero() && prev.is_one()) continue;
            for (size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = (pivot * m.at(r, c) - factor * m.at(row, c)) / prev;
        }
        prev = pivot;
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rank(Matrix m) { return echelon(m).size(); }

std::vector<std::vector<CycScalar>> kernel_basis(Matrix m) {
    const size_t n = m.cols();
    const unsigned order = m.order();
    std::vector<size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<CycScalar>> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<CycScalar> v(n, CycScalar::zero(order));
        v[free_col] = CycScalar::one(order);
        // Back-substitute pivot rows from the bottom.
        for (size_t pr = pivots.size(); pr-- > 0;) {
            size_t pc = pivots[pr];
            if (pc > free_col) continue;
            CycScalar s = CycScalar::zero(order);
            for (size_t c = pc + 1; c < n; ++c)
                if (!v[c].is_zero()) s += m.at(pr, c) * v[c];
            v[pc] = -s / m.at(pr, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<CycScalar>> solve(Matrix m, std::vector<CycScalar> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    const unsigned order = m.order();
    Matrix aug(m.rows(), m.cols() + 1, order);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    std::vector<size_t> pivots = echelon(aug);
    // Inconsistent iff a pivot lands in the rhs column.
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<CycScalar> x(m.cols(), CycScalar::zero(order));
    for (size_t pr = pivots.size(); pr-- > 0;) {
        size_t pc = pivots[pr];
        CycScalar s = aug.at(pr, m.cols());
        for (size_t c = pc + 1; c < m.cols(); ++c)
            if (!x[c].is_zero()) s -= aug.at(pr, c) * x[c];
        x[pc] = s / aug.at(pr, pc);
    }
    return x;
}

std::vector<size_t> independent_from(const std::vector<std::vector<CycScalar>>& base,
                                     const std::vector<std::vector<CycScalar>>& candidates,
                                     size_t dim, unsigned order) {
    std::vector<size_t> chosen;
    Matrix m(dim, base.size() + candidates.size(), order);
    for (size_t j = 0; j < base.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m.at(i, j) = base[j][i];
    size_t current = base.size();
    size_t current_rank = rank([&] {
        Matrix sub(dim, current, order);
        for (size_t j = 0; j < current; ++j)
            for (size_t i = 0; i < dim; ++i) sub.at(i, j) = m.at(i, j);
        return sub;
    }());
    for (size_t k = 0; k < candidates.size(); ++k) {
        for (size_t i = 0; i < dim; ++i) m.at(i, current) = candidates[k][i];
        Matrix sub(dim, current + 1, order);
        for (size_t j = 0; j <= current; ++j)
            for (size_t i = 0; i < dim; ++i) sub.at(i, j) = m.at(i, j);
        size_t r = rank(std::move(sub));
        if (r > current_rank) {
            chosen.push_back(k);
            current_rank = r;
            ++current;
        }
    }
    return chosen;
}

}  // namespace colorlie
