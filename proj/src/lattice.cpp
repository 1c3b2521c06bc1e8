#include "normone/lattice.hpp"

#include <algorithm>

namespace normone {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t d) {
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw ParameterError("matrix rows have inconsistent lengths");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ParameterError("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Int& left = at(i, t);
            if (left == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += left * o.at(t, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ParameterError("matrix sum shape mismatch");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ParameterError("matrix difference shape mismatch");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> f;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d.at(i, i) != 0) f.push_back(d.at(i, i));
    return f;
}

std::size_t SmithResult::rank() const { return invariant_factors().size(); }

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithResult res{m, IntMatrix::identity(rows), IntMatrix::identity(cols),
                    IntMatrix::identity(cols)};
    IntMatrix& A = res.d;
    IntMatrix& U = res.u;
    IntMatrix& V = res.v;
    IntMatrix& Vi = res.vinv;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < cols; ++t) std::swap(A.at(i, t), A.at(j, t));
        for (std::size_t t = 0; t < rows; ++t) std::swap(U.at(i, t), U.at(j, t));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (std::size_t t = 0; t < cols; ++t) std::swap(Vi.at(i, t), Vi.at(j, t));
    };
    // row[dst] += c * row[src]
    auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t t = 0; t < cols; ++t) A.at(dst, t) += c * A.at(src, t);
        for (std::size_t t = 0; t < rows; ++t) U.at(dst, t) += c * U.at(src, t);
    };
    // col[dst] += c * col[src]; V tracks it, Vi tracks the inverse row op.
    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t r = 0; r < rows; ++r) A.at(r, dst) += c * A.at(r, src);
        for (std::size_t r = 0; r < cols; ++r) V.at(r, dst) += c * V.at(r, src);
        for (std::size_t t = 0; t < cols; ++t) Vi.at(src, t) -= c * Vi.at(dst, t);
    };
    auto neg_row = [&](std::size_t i) {
        for (std::size_t t = 0; t < cols; ++t) A.at(i, t) = -A.at(i, t);
        for (std::size_t t = 0; t < rows; ++t) U.at(i, t) = -U.at(i, t);
    };

    const std::size_t nmin = std::min(rows, cols);
    std::size_t t = 0;
    while (t < nmin) {
        // Minimal absolute nonzero entry of the trailing block as pivot.
        std::size_t pi = 0, pj = 0;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (A.at(i, j) == 0) continue;
                if (!found || abs(A.at(i, j)) < abs(A.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);

        for (std::size_t i = t + 1; i < rows; ++i)
            if (A.at(i, t) != 0) addmul_row(i, t, -(A.at(i, t) / A.at(t, t)));
        for (std::size_t j = t + 1; j < cols; ++j)
            if (A.at(t, j) != 0) addmul_col(j, t, -(A.at(t, j) / A.at(t, t)));

        bool leftover = false;
        for (std::size_t i = t + 1; i < rows && !leftover; ++i) leftover = A.at(i, t) != 0;
        for (std::size_t j = t + 1; j < cols && !leftover; ++j) leftover = A.at(t, j) != 0;
        if (leftover) continue;  // re-pivot on the (smaller) remainders

        // Divisibility d_t | everything below-right; pull in a bad row and redo.
        bool fixed = true;
        for (std::size_t i = t + 1; i < rows && fixed; ++i)
            for (std::size_t j = t + 1; j < cols && fixed; ++j)
                if (A.at(i, j) % A.at(t, t) != 0) {
                    addmul_row(t, i, 1);
                    fixed = false;
                }
        if (!fixed) continue;

        if (A.at(t, t) < 0) neg_row(t);
        ++t;
    }
    return res;
}

LatticeAction::LatticeAction(IntMatrix T, std::uint32_t order_) : t(std::move(T)), order(order_) {
    if (t.rows() != t.cols()) throw ParameterError("action matrix must be square");
    if (order == 0) throw ParameterError("action order must be positive");
    IntMatrix power = IntMatrix::identity(t.rows());
    for (std::uint32_t i = 0; i < order; ++i) power = power * t;
    if (!(power == IntMatrix::identity(t.rows())))
        throw ParameterError("action matrix does not have the declared finite order");
    // Finite order forces unimodularity; assert it anyway.
    for (const Int& f : smith_normal_form(t).invariant_factors())
        if (f != 1) throw ParameterError("action matrix is not unimodular");
}

IntMatrix LatticeAction::norm() const {
    IntMatrix acc(t.rows(), t.cols());
    IntMatrix power = IntMatrix::identity(t.rows());
    for (std::uint32_t i = 0; i < order; ++i) {
        acc = acc + power;
        power = power * t;
    }
    return acc;
}

IntMatrix LatticeAction::coboundary() const { return t - IntMatrix::identity(t.rows()); }

namespace {

// Invariant factors (> 1) of ker(big) / im(small); requires im(small) to lie
// in ker(big) and the quotient to be finite, both true for Tate quotients.
std::vector<Int> kernel_quotient(const IntMatrix& big, const IntMatrix& small) {
    const std::size_t n = big.cols();
    SmithResult s = smith_normal_form(big);
    const std::size_t rank = s.rank();
    const std::size_t kdim = n - rank;
    if (kdim == 0) return {};

    // Coordinates of each column of `small` in the kernel basis (the last
    // kdim columns of V): y = V^{-1} * column; the first `rank` coordinates
    // must vanish.
    IntMatrix coords(kdim, small.cols());
    for (std::size_t j = 0; j < small.cols(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            Int y = 0;
            for (std::size_t c = 0; c < n; ++c) y += s.vinv.at(i, c) * small.at(c, j);
            if (i < rank) {
                if (y != 0) throw Error("image does not lie in the kernel");
            } else {
                coords.at(i - rank, j) = std::move(y);
            }
        }
    }

    SmithResult q = smith_normal_form(coords);
    std::vector<Int> factors = q.invariant_factors();
    if (factors.size() != kdim) throw Error("quotient is not finite");
    std::vector<Int> out;
    for (Int& f : factors)
        if (f > 1) out.push_back(std::move(f));
    return out;
}

}  // namespace

std::vector<Int> tate_h1(const LatticeAction& act) {
    return kernel_quotient(act.norm(), act.coboundary());
}

std::vector<Int> tate_h2(const LatticeAction& act) {
    return kernel_quotient(act.coboundary(), act.norm());
}

IntMatrix cyclic_shift_matrix(std::size_t count, std::size_t step) {
    if (count == 0) throw ParameterError("cyclic shift needs at least one coordinate");
    IntMatrix T(count, count);
    for (std::size_t g = 0; g < count; ++g) T.at((g + step) % count, g) = 1;
    return T;
}

}  // namespace normone
