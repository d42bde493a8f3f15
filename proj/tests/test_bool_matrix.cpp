#include <doctest.h>

#include <stdexcept>
#include <string>

#include "sweep/bool_matrix.hpp"
#include "sweep/rng.hpp"

using sweep::Bitset;
using sweep::BoolMatrix;
using sweep::Rng;
using sweep::row_star;
using sweep::star_multiply;

namespace {

// Reference max-min product computed with the naive triple loop, for
// cross-checking the bit-parallel implementation.
BoolMatrix reference_star(const BoolMatrix& p, const BoolMatrix& q) {
    BoolMatrix out(p.rows(), q.cols());
    for (int l = 0; l < p.rows(); ++l)
        for (int n = 0; n < q.cols(); ++n)
            for (int m = 0; m < p.cols(); ++m)
                if (p.test(l, m) && q.test(m, n)) out.set(l, n);
    return out;
}

BoolMatrix random_matrix(int rows, int cols, Rng& rng) {
    BoolMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.next_u64() & 1) m.set(r, c);
    return m;
}

BoolMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    BoolMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) m.set(r, c);
    return m;
}

Bitset bits(const std::vector<int>& v) {
    Bitset b(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) b.set(i);
    return b;
}

}  // namespace

TEST_CASE("star product with identity is a no-op") {
    BoolMatrix p(1, 2);
    p.set(0, 0);
    const BoolMatrix r = star_multiply(p, BoolMatrix::identity(2));
    CHECK(r.rows() == 1);
    CHECK(r.cols() == 2);
    CHECK(r.test(0, 0));
    CHECK_FALSE(r.test(0, 1));
}

TEST_CASE("star product with a zero factor is zero") {
    BoolMatrix p(2, 3);
    p.set(0, 1);
    p.set(1, 2);
    const BoolMatrix z(3, 2);
    const BoolMatrix r = star_multiply(p, z);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) CHECK_FALSE(r.test(i, j));
}

TEST_CASE("row vector times path adjacency spreads to neighbours") {
    // Path 1-2-3, occupancy on the middle vertex only.
    const BoolMatrix a = from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    BoolMatrix d(1, 3);
    d.set(0, 1);
    const BoolMatrix r = star_multiply(d, a);
    CHECK(r.test(0, 0));
    CHECK_FALSE(r.test(0, 1));
    CHECK(r.test(0, 2));
}

TEST_CASE("star product equals the exists-composition on all 3x3 pairs") {
    // 2^9 matrices per side; enumerate every pair and compare against the
    // definitional triple loop.
    for (unsigned pm = 0; pm < 512; ++pm) {
        BoolMatrix p(3, 3);
        for (int i = 0; i < 9; ++i)
            if (pm >> i & 1) p.set(i / 3, i % 3);
        for (unsigned qm = 0; qm < 512; qm += 7) {  // stride keeps this under a second
            BoolMatrix q(3, 3);
            for (int i = 0; i < 9; ++i)
                if (qm >> i & 1) q.set(i / 3, i % 3);
            REQUIRE(star_multiply(p, q) == reference_star(p, q));
        }
    }
}

TEST_CASE("star product is associative") {
    Rng rng(20240517);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = 1 + static_cast<int>(rng.next_below(6));
        const int b = 1 + static_cast<int>(rng.next_below(6));
        const int c = 1 + static_cast<int>(rng.next_below(6));
        const int d = 1 + static_cast<int>(rng.next_below(6));
        const BoolMatrix p = random_matrix(a, b, rng);
        const BoolMatrix q = random_matrix(b, c, rng);
        const BoolMatrix r = random_matrix(c, d, rng);
        REQUIRE(star_multiply(star_multiply(p, q), r) == star_multiply(p, star_multiply(q, r)));
    }
}

TEST_CASE("star product rejects mismatched dimensions") {
    const BoolMatrix p(2, 3);
    const BoolMatrix q(2, 3);
    CHECK_THROWS_AS(star_multiply(p, q), std::invalid_argument);
}

TEST_CASE("row_star runs the dynamics for the requested number of steps") {
    // Path on 5 vertices with self-loops: occupancy can spread one hop per step.
    const BoolMatrix m = from_rows({{1, 1, 0, 0, 0},
                                    {1, 1, 1, 0, 0},
                                    {0, 1, 1, 1, 0},
                                    {0, 0, 1, 1, 1},
                                    {0, 0, 0, 1, 1}});
    const Bitset start = bits({1, 0, 0, 0, 0});
    CHECK(row_star(start, m, 1) == bits({1, 1, 0, 0, 0}));
    CHECK(row_star(start, m, 2) == bits({1, 1, 1, 0, 0}));
    CHECK(row_star(start, m, 4) == bits({1, 1, 1, 1, 1}));
    // Saturation: extra steps change nothing.
    CHECK(row_star(start, m, 9) == bits({1, 1, 1, 1, 1}));
}

TEST_CASE("row_star over a zero matrix clears everything") {
    const BoolMatrix z(4, 4);
    Bitset d(4);
    d.set_all();
    CHECK(row_star(d, z, 1).none());
}

TEST_CASE("row_star with n steps closes connected components") {
    // Two components: 1-2 and 3-4-5 (self-loops everywhere).
    const BoolMatrix m = from_rows({{1, 1, 0, 0, 0},
                                    {1, 1, 0, 0, 0},
                                    {0, 0, 1, 1, 0},
                                    {0, 0, 1, 1, 1},
                                    {0, 0, 0, 1, 1}});
    const Bitset start = bits({0, 0, 0, 1, 0});
    const Bitset closure = row_star(start, m, 5);
    CHECK(closure == bits({0, 0, 1, 1, 1}));
    // Idempotent once saturated.
    CHECK(row_star(closure, m, 5) == closure);
}

TEST_CASE("row_star validates its arguments") {
    const BoolMatrix m(3, 3);
    Bitset d(3);
    CHECK_THROWS_AS(row_star(d, m, 0), std::invalid_argument);
    Bitset wrong(4);
    CHECK_THROWS_AS(row_star(wrong, m, 1), std::invalid_argument);
}

TEST_CASE("matrix predicates and serialization") {
    BoolMatrix m(2, 2);
    m.set(0, 1);
    CHECK_FALSE(m.is_symmetric());
    m.set(1, 0);
    CHECK(m.is_symmetric());
    CHECK_FALSE(m.has_unit_diagonal());
    m.set(0, 0);
    m.set(1, 1);
    CHECK(m.has_unit_diagonal());
    CHECK(sweep::serialize_matrix(m) == "1 1\n1 1\n");
    CHECK(sweep::serialize_matrix(BoolMatrix::identity(2)) == "1 0\n0 1\n");
}
