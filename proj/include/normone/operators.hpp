#pragma once

#include <cstdint>
#include <vector>

#include "normone/poly.hpp"

namespace normone {

// The subgroup of order p^m inside the order-p^n group, generated by the
// subgroup_step(m)-th power of the ambient generator.
struct SubgroupSpec {
    GroupContext ctx;
    int m;

    SubgroupSpec(const GroupContext& c, int exponent) : ctx(c), m(c.checked_exponent(exponent)) {}
    std::uint32_t step() const { return ctx.subgroup_step(m); }
    std::uint32_t order() const { return ctx.subgroup_order(m); }
};

// The generator acts by sending x[j] to x[j + e mod order]; extended to words
// letterwise and to polynomials linearly.  A ring automorphism for every e.
Poly shift(const Poly& P, long long e);

// An element of the integral group algebra, kept as a sparse sorted list of
// (exponent, coefficient) pairs.  Acts on Poly by summing shifted copies.
class Operator {
public:
    explicit Operator(const GroupContext& ctx) : ctx_(ctx) {}
    static Operator identity(const GroupContext& ctx);
    // c * sigma^e as an operator.
    static Operator shift_term(const GroupContext& ctx, long long e, Int c = 1);
    static Operator from_terms(const GroupContext& ctx,
                               std::vector<std::pair<std::uint32_t, Int>> terms);

    const GroupContext& ctx() const { return ctx_; }
    std::span<const std::pair<std::uint32_t, Int>> terms() const { return terms_; }
    bool operator==(const Operator& o) const;

    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    // Convolution: exponents add mod order.
    Operator operator*(const Operator& o) const;
    Operator operator-() const;
    Operator scale(const Int& c) const;

    Poly apply(const Poly& P) const;

private:
    void canonicalize();
    GroupContext ctx_;
    // Sorted by exponent, no zero coefficients.
    std::vector<std::pair<std::uint32_t, Int>> terms_;
};

// Sum over the subgroup: 1 + sigma^d + sigma^{2d} + ... + sigma^{(p^m-1)d}
// with d = subgroup_step(m).
Operator norm_op(const SubgroupSpec& H);

// Truncated sum 1 + sigma^d + ... + sigma^{(count-1)d} for an arbitrary
// stride d; count = 0 gives the zero operator.
Operator partial_sum_op(const GroupContext& ctx, std::uint32_t d, std::uint32_t count);

Poly apply_operator(const Operator& op, const Poly& P);

}  // namespace normone
