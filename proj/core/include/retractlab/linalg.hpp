#ifndef RETRACTLAB_LINALG_HPP
#define RETRACTLAB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "retractlab/field.hpp"

namespace retractlab {

/// Dense matrix over an exact field, rows of equal length. This is the
/// elimination backend behind the bounded membership / dependence solvers;
/// pivoting is deterministic (first nonzero entry in column order) so
/// solutions and kernels are reproducible.
class Matrix {
public:
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), cols_(cols),
          data_(rows, std::vector<mpq_class>(cols, 0)) {}

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    mpq_class& at(std::size_t r, std::size_t c) { return data_[r][c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r][c]; }

    /// Reduced row echelon form in place; returns the pivot column of each
    /// pivot row (rank = result size).
    std::vector<std::size_t> rref();

    std::size_t rank() const;

private:
    FieldSpec field_;
    std::size_t cols_;
    std::vector<std::vector<mpq_class>> data_;
};

/// One solution of A x = b with all free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<mpq_class>> solve(const Matrix& a, const std::vector<mpq_class>& b);

/// Echelonized basis of the null space of A (one vector per free column,
/// in column order).
std::vector<std::vector<mpq_class>> kernel_basis(const Matrix& a);

} // namespace retractlab

#endif
