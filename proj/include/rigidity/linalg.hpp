#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <vector>

namespace rigidity {

/// Dense row-major matrix over ℚ.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    [[nodiscard]] const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_diagonal() const;
    static QMatrix identity(std::size_t n);

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const mpq_class& s, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

/// [a, b] = ab - ba
[[nodiscard]] QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Kronecker product.
[[nodiscard]] QMatrix kron(const QMatrix& a, const QMatrix& b);

/// Rank by fraction-free (Bareiss) elimination after clearing denominators row by row.
[[nodiscard]] std::size_t rank(const QMatrix& m);

/// Basis of the right null space, from the reduced row echelon form.
[[nodiscard]] std::vector<std::vector<mpq_class>> kernel(const QMatrix& m);

}  // namespace rigidity
