#include "sweep/bool_matrix.hpp"

#include <stdexcept>

namespace sweep {

BoolMatrix::BoolMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("BoolMatrix: dimensions must be positive");
    data_.assign(static_cast<std::size_t>(rows), Bitset(static_cast<std::size_t>(cols)));
}

BoolMatrix BoolMatrix::identity(int n) {
    BoolMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

bool BoolMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (test(r, c) != test(c, r)) return false;
    return true;
}

bool BoolMatrix::has_unit_diagonal() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        if (!test(i, i)) return false;
    return true;
}

bool BoolMatrix::operator==(const BoolMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

BoolMatrix star_multiply(const BoolMatrix& p, const BoolMatrix& q) {
    if (p.cols() != q.rows())
        throw std::invalid_argument("star_multiply: inner dimensions differ (" +
                                    std::to_string(p.cols()) + " vs " + std::to_string(q.rows()) + ")");
    BoolMatrix result(p.rows(), q.cols());
    for (int l = 0; l < p.rows(); ++l) {
        Bitset& out = result.row(l);
        p.row(l).for_each_set([&](std::size_t m) { out |= q.row(static_cast<int>(m)); });
    }
    return result;
}

Bitset row_star(const Bitset& d, const BoolMatrix& m, int steps) {
    if (steps < 1)
        throw std::invalid_argument("row_star: steps must be >= 1");
    if (!m.is_square() || static_cast<std::size_t>(m.rows()) != d.size())
        throw std::invalid_argument("row_star: matrix must be square of size " + std::to_string(d.size()));
    Bitset current = d;
    for (int s = 0; s < steps; ++s) {
        Bitset next(d.size());
        current.for_each_set([&](std::size_t i) { next |= m.row(static_cast<int>(i)); });
        if (next == current) break;  // fixpoint, further products are identical
        current = next;
    }
    return current;
}

std::string serialize_matrix(const BoolMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * (static_cast<std::size_t>(m.cols()) * 2 + 1));
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out.push_back(' ');
            out.push_back(m.test(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace sweep
