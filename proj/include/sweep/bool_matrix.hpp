#pragma once

#include "sweep/bitset.hpp"

#include <string>
#include <vector>

namespace sweep {

/// Dense boolean matrix; each row is a Bitset over the columns.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(int rows, int cols);

    static BoolMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool test(int r, int c) const { return data_[static_cast<std::size_t>(r)].test(static_cast<std::size_t>(c)); }
    void set(int r, int c) { data_[static_cast<std::size_t>(r)].set(static_cast<std::size_t>(c)); }
    void assign(int r, int c, bool value) { data_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(c), value); }

    const Bitset& row(int r) const { return data_[static_cast<std::size_t>(r)]; }
    Bitset& row(int r) { return data_[static_cast<std::size_t>(r)]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool has_unit_diagonal() const;

    bool operator==(const BoolMatrix& other) const;
    bool operator!=(const BoolMatrix& other) const { return !(*this == other); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Bitset> data_;
};

/// Max-min product of boolean matrices: result(l,n) = 1 iff some m has
/// p(l,m) = 1 and q(m,n) = 1. Throws std::invalid_argument on a
/// dimension mismatch.
BoolMatrix star_multiply(const BoolMatrix& p, const BoolMatrix& q);

/// Treats `d` as a 1 x n row vector and star-multiplies it with `m`,
/// `steps` times. Requires steps >= 1 and m square of size d.size().
Bitset row_star(const Bitset& d, const BoolMatrix& m, int steps);

/// "0 1 0\n1 0 1\n..." rendering, one row per line.
std::string serialize_matrix(const BoolMatrix& m);

}  // namespace sweep
