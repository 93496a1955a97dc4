#include "retractlab/linalg.hpp"

#include <algorithm>

namespace retractlab {

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows(); ++col) {
        std::size_t pivot = rows();
        for (std::size_t r = row; r < rows(); ++r) {
            if (data_[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows()) continue;
        std::swap(data_[row], data_[pivot]);
        mpq_class inv = field_.inv(data_[row][col]);
        for (std::size_t c = col; c < cols_; ++c) {
            data_[row][c] = field_.mul(data_[row][c], inv);
        }
        for (std::size_t r = 0; r < rows(); ++r) {
            if (r == row || data_[r][col] == 0) continue;
            mpq_class factor = data_[r][col];
            for (std::size_t c = col; c < cols_; ++c) {
                data_[r][c] = field_.sub(data_[r][c], field_.mul(factor, data_[row][c]));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

std::optional<std::vector<mpq_class>> solve(const Matrix& a, const std::vector<mpq_class>& b) {
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = a.field().reduce(b[r]);
    }
    std::vector<std::size_t> pivots = aug.rref();
    // A pivot in the augmented column means the system is inconsistent.
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<mpq_class> x(a.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = aug.at(i, a.cols());
    }
    return x;
}

std::vector<std::vector<mpq_class>> kernel_basis(const Matrix& a) {
    Matrix copy = a;
    std::vector<std::size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = a.field().neg(copy.at(i, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace retractlab
