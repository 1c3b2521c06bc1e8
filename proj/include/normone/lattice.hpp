#pragma once

#include <cstdint>
#include <vector>

#include "normone/poly.hpp"  // for Int

namespace normone {

// Dense integer matrix, row-major, exact arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t d);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Smith normal form D = U * M * V with U, V unimodular, D diagonal with
// nonnegative entries d_1 | d_2 | ... .  `vinv` is V^{ -1 }, tracked so
// kernel coordinates can be read off without solving.
struct SmithResult {
    IntMatrix d, u, v, vinv;
    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
    std::size_t rank() const;                    // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& m);

// A finite-order integral representation of the cyclic group: the matrix T
// of the generator acting on Z^d, with T^order = I (validated; together with
// finite order this forces |det T| = 1, which is also checked).
struct LatticeAction {
    IntMatrix t;
    std::uint32_t order;

    LatticeAction(IntMatrix T, std::uint32_t order);
    std::size_t dim() const { return t.rows(); }
    IntMatrix norm() const;      // I + T + T^2 + ... + T^{order-1}
    IntMatrix coboundary() const;  // T - I
};

// Invariant factors (> 1) of the Tate quotients: h1 = ker(norm) / im(T - 1),
// h2 = ker(T - 1) / im(norm).  Empty vector = trivial group.  Exact; both
// quotients are finite for a finite-order action, and every factor divides
// the group order.
std::vector<Int> tate_h1(const LatticeAction& act);
std::vector<Int> tate_h2(const LatticeAction& act);

// Permutation matrix of the translation action on Z[G/H']: coordinates are
// the `count` cosets, the generator shifts them cyclically by `step` ... in
// the regular case (count = order, step = 1) this is the regular
// representation; step > 1 models the action on a quotient orbit.
IntMatrix cyclic_shift_matrix(std::size_t count, std::size_t step = 1);

}  // namespace normone
