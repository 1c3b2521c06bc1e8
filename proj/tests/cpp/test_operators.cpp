#include "doctest.h"
#include "support.hpp"

using namespace normone;
using testsupport::PolyGen;

TEST_CASE("shift acts letterwise and composes additively") {
    GroupContext c(2, 2);
    Poly x = Poly::generator(c, 0);
    CHECK(shift(x, 1) == Poly::generator(c, 1));
    CHECK(shift(x, 5) == Poly::generator(c, 1));  // exponents mod order
    CHECK(shift(x, -1) == Poly::generator(c, 3));

    PolyGen gen(c, 17);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p = gen.poly();
        long long e1 = gen.below(8), e2 = gen.below(8);
        CHECK(shift(shift(p, e1), e2) == shift(p, e1 + e2));
        CHECK(shift(p, 0) == p);
        CHECK(shift(p, c.order()) == p);
    }
}

TEST_CASE("shift is a ring automorphism") {
    GroupContext c(3, 2);
    PolyGen gen(c, 23);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = gen.poly();
        Poly b = gen.poly();
        long long e = gen.below(9);
        CHECK(shift(a * b, e) == shift(a, e) * shift(b, e));
        CHECK(shift(a + b, e) == shift(a, e) + shift(b, e));
    }
}

TEST_CASE("operator algebra: convolution product and identities") {
    GroupContext c(2, 3);
    Operator id = Operator::identity(c);
    Operator s1 = Operator::shift_term(c, 1);
    Operator s2 = Operator::shift_term(c, 2);
    CHECK(s1 * s1 == s2);
    CHECK(s1 * id == s1);
    CHECK((s1 + s2) - s2 == s1);
    CHECK(s1.scale(0) == Operator(c));
    // exponents wrap
    CHECK(Operator::shift_term(c, 7) * s1 == id);
    CHECK_THROWS_AS(Operator::from_terms(c, {{8, 1}}), ParameterError);
}

TEST_CASE("operator application is linear and matches shifts") {
    GroupContext c(2, 3);
    PolyGen gen(c, 31);
    Operator op = Operator::from_terms(c, {{0, 2}, {3, -1}, {5, 1}});
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = gen.poly();
        Poly expect = p.scale(2) - shift(p, 3) + shift(p, 5);
        CHECK(apply_operator(op, p) == expect);
        Poly q = gen.poly();
        CHECK(apply_operator(op, p + q) == apply_operator(op, p) + apply_operator(op, q));
    }
    // composition agrees with application twice
    Operator a = Operator::from_terms(c, {{1, 1}, {2, 3}});
    Operator b = Operator::from_terms(c, {{0, -1}, {5, 2}});
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = gen.poly();
        CHECK(apply_operator(a * b, p) == apply_operator(a, apply_operator(b, p)));
    }
}

TEST_CASE("subgroup norms and partial sums") {
    GroupContext c(2, 3);
    SubgroupSpec whole(c, 3);
    SubgroupSpec half(c, 2);
    SubgroupSpec tiny(c, 1);
    CHECK(tiny.step() == 4);
    CHECK(half.step() == 2);
    CHECK(norm_op(whole) == partial_sum_op(c, 1, 8));
    CHECK(norm_op(half) == partial_sum_op(c, 2, 4));
    CHECK(norm_op(tiny) == Operator::from_terms(c, {{0, 1}, {4, 1}}));
    CHECK(partial_sum_op(c, 2, 0) == Operator(c));

    // Norm invariance: shifting by the subgroup step fixes N_H(P).
    PolyGen gen(c, 41);
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = gen.poly();
        Poly n = apply_operator(norm_op(half), p);
        CHECK(shift(n, half.step()) == n);
    }

    // Trivial subgroup: the norm is the identity operator.
    SubgroupSpec trivial(c, 0);
    CHECK(norm_op(trivial) == Operator::identity(c));
}

TEST_CASE("norm over the whole group is the full partial sum") {
    for (auto [p, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
        GroupContext c(p, n);
        CHECK(norm_op(SubgroupSpec(c, n)) == partial_sum_op(c, 1, c.order()));
    }
}
