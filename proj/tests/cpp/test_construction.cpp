#include "doctest.h"
#include "normone/construction.hpp"
#include "support.hpp"

using namespace normone;
using testsupport::PolyGen;

namespace {

Poly term_list(const GroupContext& c, std::vector<std::pair<int, std::vector<int>>> spec) {
    std::vector<Poly::Term> terms;
    for (auto& [coeff, letters] : spec) {
        Word w;
        for (int l : letters) w.push_back(static_cast<Letter>(l));
        terms.push_back({std::move(w), Int(coeff)});
    }
    return Poly::from_terms(c, std::move(terms));
}

}  // namespace

TEST_CASE("schedules") {
    CHECK(unit_schedule(4) == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}});
    CHECK(unit_schedule(2) == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(unit_schedule(1).empty());
    CHECK(doubling_schedule(4) == std::vector<std::pair<int, int>>{{2, 1}, {4, 2}});
    CHECK(doubling_schedule(5) == std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {5, 1}});
    CHECK(doubling_schedule(8) == std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {8, 4}});
    CHECK(doubling_schedule(2) == std::vector<std::pair<int, int>>{{2, 1}});

    GroupContext c(2, 3);
    validate_schedule(c, {{2, 1}, {3, 1}});
    CHECK_THROWS_AS(validate_schedule(c, {}), ParameterError);
    CHECK_THROWS_AS(validate_schedule(c, {{2, 1}}), ParameterError);          // stops early
    CHECK_THROWS_AS(validate_schedule(c, {{3, 1}}), ParameterError);          // no base
    CHECK_THROWS_AS(validate_schedule(c, {{2, 1}, {3, 2}}), ParameterError);  // k > m/2
    CHECK_THROWS_AS(validate_schedule(GroupContext(2, 1), {{2, 1}}), ParameterError);
    validate_schedule(GroupContext(2, 1), {});
}

TEST_CASE("p=2 chain reproduces the reference element exactly") {
    GroupContext c(2, 2);
    GenerateOptions o;
    o.strategy = Strategy::Unit;
    Chain ch = generate(c, o);
    REQUIRE(ch.steps.size() == 1);
    REQUIRE(ch.final.has_value());

    Poly expected = term_list(c, {{1, {1, 0}},
                                  {1, {0, 2, 0}},
                                  {1, {0, 3, 0}},
                                  {-1, {1, 0, 0}},
                                  {-1, {1, 3, 0}}});
    CHECK(*ch.final == expected);
    CHECK(ch.final->term_count() == 5);
    CHECK(ch.steps[0].verified_by == StepCheck::Oracle);

    // The normal form collapses it to the equivalent 5-term expression.
    Poly reduced = term_list(c, {{2, {0, 0}},
                                 {-1, {0, 0, 0}},
                                 {-1, {0, 1, 0}},
                                 {-1, {1, 0, 0}},
                                 {1, {1, 1, 0}}});
    CHECK(normal_form(*ch.final) == reduced);
    CHECK(is_norm_one(normal_form(*ch.final), SubgroupSpec(c, 2)));
}

TEST_CASE("p=3 chain reproduces the reference element exactly") {
    GroupContext c(3, 2);
    Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::Oracle});
    REQUIRE(ch.final.has_value());
    Poly expected = term_list(
        c, {{-1, {0, 0}},      {2, {1, 0}},       {-1, {3, 0}},      {1, {4, 0}},
            {1, {0, 3, 0}},    {1, {0, 4, 0}},    {1, {0, 5, 0}},    {1, {0, 6, 0}},
            {1, {0, 7, 0}},    {1, {0, 8, 0}},    {-1, {1, 4, 0}},   {-1, {1, 5, 0}},
            {-1, {1, 6, 0}},   {-1, {1, 7, 0}},   {-1, {1, 8, 0}},   {-1, {1, 0, 0}},
            {1, {3, 6, 0}},    {1, {3, 7, 0}},    {1, {3, 8, 0}},    {-1, {4, 7, 0}},
            {-1, {4, 8, 0}},   {-1, {4, 0, 0}}});
    CHECK(*ch.final == expected);
    CHECK(ch.final->term_count() == 22);
    CHECK(ch.final->coeff(Word{Letter(1), Letter(0)}) == 2);
}

TEST_CASE("the compact alternative norm-one element checks out") {
    GroupContext c(2, 2);
    Poly x = Poly::generator(c, 0);
    Poly s = shift(x, 1);
    Poly alt = x * s * x + x * s - x * x * s;
    CHECK(is_norm_one(alt, SubgroupSpec(c, 2)));
}

TEST_CASE("step-local data satisfies the defining identities") {
    struct Case {
        int p, m, k;
        std::size_t multiplier_terms;
    };
    for (const Case& cs : {Case{2, 2, 1, 5}, Case{3, 2, 1, 22}, Case{5, 2, 1, 108},
                           Case{2, 3, 1, 30}, Case{2, 4, 1, 126}, Case{2, 4, 2, 54},
                           Case{3, 3, 1, 232}}) {
        CAPTURE(cs.p);
        CAPTURE(cs.m);
        CAPTURE(cs.k);
        GroupContext local(cs.p, cs.m);
        Poly x = Poly::generator(local, 0);
        Poly z = norm_defect(x, cs.m, cs.k);
        Poly w = defect_witness(x, cs.m, cs.k);
        Poly a = generic_step_multiplier(cs.p, cs.m, cs.k);

        // Everything below holds modulo the hypothesis: the input is norm-one
        // for the subgroup of order p^{m-k}.
        RelationSet rel = RelationSet::for_subgroup_exponent(local, cs.m - cs.k);
        SubgroupSpec hyp(local, cs.m - cs.k);

        // The defect is killed by the hypothesis subgroup's norm.
        CHECK(norm_normal_form(z, hyp, rel).is_zero());

        // The witness trivializes it: (t - 1)(w) = z for t the subgroup's step.
        const std::uint32_t u = local.subgroup_step(cs.m - cs.k);
        CHECK(rel.normal_form(shift(w, u) - w - z).is_zero());

        // The multiplier is the weighted input corrected by the coboundary.
        Int weight = 1;
        for (int i = 0; i < cs.m - 2 * cs.k; ++i) weight *= cs.p;
        CHECK(a == x.scale(weight) + (w - shift(w, 1)));

        // Size ledger: recorded count and the guaranteed bound.
        CHECK(a.term_count() == cs.multiplier_terms);
        CHECK(Int(a.term_count()) <= step_bound(cs.p, cs.m, cs.k));

        // And the step is certified: the output is norm-one one level up.
        CHECK(certify_step(cs.p, cs.m, cs.k));
    }
}

TEST_CASE("lift-step argument validation") {
    GroupContext c(2, 3);
    Poly x = Poly::generator(c, 0);
    CHECK_THROWS_AS(norm_defect(x, 1, 1), ParameterError);   // m < 2
    CHECK_THROWS_AS(norm_defect(x, 3, 2), ParameterError);   // k > m/2
    CHECK_THROWS_AS(norm_defect(x, 4, 1), ParameterError);   // m > n
    CHECK_THROWS_AS(defect_witness(x, 2, 0), ParameterError);
    CHECK_THROWS_AS(certify_step(2, 5, 3), ParameterError);
}

TEST_CASE("coboundary solver: property test over random right-hand sides") {
    for (int p : {2, 3}) {
        GroupContext c(p, 2);
        RelationSet rel = RelationSet::elementary(c);
        Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::None});
        REQUIRE(ch.final.has_value());
        for (int m = 1; m <= 2; ++m) {
            SubgroupSpec H(c, m);
            const std::uint32_t t = H.step();
            // A norm-one witness for this subgroup: the generator works for the
            // order-p subgroup, the generated element for the whole group.
            Poly x_wit = (m == 1) ? Poly::generator(c, 0) : *ch.final;
            PolyGen gen(c, 977u * p + m);
            for (int trial = 0; trial < 60; ++trial) {
                Poly v = gen.poly(2, 5, 3);
                Poly z = shift(v, t) - v;  // a coboundary, hence norm-zero
                Poly w = solve_coboundary(x_wit, z, H, true);
                CHECK(rel.normal_form(shift(w, t) - w - z).is_zero());
            }
        }
    }
}

TEST_CASE("coboundary solver rejects bad inputs with named residuals") {
    GroupContext c(2, 2);
    SubgroupSpec E(c, 1);
    Poly x = Poly::generator(c, 0);
    Poly z_good = shift(x, 2) - x;

    // Witness that is not norm-one: N_E(2x) = 2.
    CHECK_THROWS_AS(solve_coboundary(x.scale(2), z_good, E, true), VerificationError);
    // Right-hand side that is not norm-zero: N_E(1) = 2.
    CHECK_THROWS_AS(solve_coboundary(x, Poly::unit(c), E, true), VerificationError);
    try {
        solve_coboundary(x, Poly::unit(c), E, true);
        FAIL("expected a verification error");
    } catch (const VerificationError& e) {
        CHECK(e.residual_terms > 0);
        CHECK(std::string(e.what()).find("norm-zero") != std::string::npos);
    }
    // With checks off the construction itself still runs.
    Poly w = solve_coboundary(x, z_good, E, false);
    RelationSet rel = RelationSet::elementary(c);
    CHECK(rel.normal_form(shift(w, 2) - w - z_good).is_zero());
}

TEST_CASE("generate records the whole chain with sizes and bounds") {
    GroupContext c(2, 3);
    Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::Oracle});
    REQUIRE(ch.steps.size() == 2);
    CHECK(ch.schedule == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});

    const LiftStep& s1 = ch.steps[0];
    CHECK(s1.m == 2);
    CHECK(s1.expanded);
    CHECK(s1.output->term_count() == 5);
    CHECK(s1.step_monomials == 5);
    CHECK(s1.bound == 7);
    CHECK(s1.verified_by == StepCheck::Oracle);

    const LiftStep& s2 = ch.steps[1];
    CHECK(s2.m == 3);
    CHECK(s2.expanded);
    CHECK(s2.multiplier->term_count() == 630);
    CHECK(s2.output->term_count() == 3150);
    CHECK(s2.step_monomials == 30);
    CHECK(s2.bound == 37);

    REQUIRE(ch.final.has_value());
    CHECK(ch.final->term_count() == 3150);

    // Each intermediate output is norm-one for its own subgroup.
    CHECK(is_norm_one(*s1.output, SubgroupSpec(c, 2)));
    CHECK(is_norm_one(*ch.final, SubgroupSpec(c, 3)));
}

TEST_CASE("doubling strategy reaches the same guarantee in fewer steps") {
    GroupContext c(2, 4);
    Chain ch = generate(c, GenerateOptions{Strategy::Doubling, {}, StepCheck::Oracle});
    REQUIRE(ch.steps.size() == 2);
    CHECK(ch.steps[0].verified_by == StepCheck::Oracle);
    CHECK(ch.steps[1].verified_by == StepCheck::Oracle);
    CHECK(ch.steps[1].multiplier->term_count() == 1230);
    REQUIRE(ch.final.has_value());
    CHECK(ch.final->term_count() == 6150);
    CHECK(is_norm_one(*ch.final, SubgroupSpec(c, 4)));
}

TEST_CASE("explicit schedules are honored") {
    GroupContext c(2, 4);
    GenerateOptions o;
    o.strategy = Strategy::Explicit;
    o.schedule = {{2, 1}, {4, 2}};
    o.verify = StepCheck::Certificate;
    Chain ch = generate(c, o);
    CHECK(ch.schedule == o.schedule);
    CHECK(ch.steps[0].verified_by == StepCheck::Certificate);

    o.schedule = {{2, 1}, {3, 1}, {3, 1}};
    CHECK_THROWS_AS(generate(c, o), ParameterError);
}

TEST_CASE("term budget degrades gracefully to certified step-local data") {
    GroupContext c(2, 3);
    GenerateOptions o;
    o.strategy = Strategy::Unit;
    o.verify = StepCheck::Oracle;
    o.term_budget = 100;  // first step fits, second does not
    Chain ch = generate(c, o);
    REQUIRE(ch.steps.size() == 2);
    CHECK(ch.steps[0].expanded);
    CHECK(ch.steps[0].verified_by == StepCheck::Oracle);
    CHECK_FALSE(ch.steps[1].expanded);
    CHECK_FALSE(ch.steps[1].output.has_value());
    CHECK(ch.steps[1].verified_by == StepCheck::Certificate);
    CHECK(ch.steps[1].step_monomials == 30);  // step-local data still present
    CHECK_FALSE(ch.final.has_value());

    o.term_budget = 0;  // nothing is materialized
    Chain bare = generate(c, o);
    CHECK_FALSE(bare.steps[0].expanded);
    CHECK(bare.steps[0].verified_by == StepCheck::Certificate);
}

TEST_CASE("StepCheck::None records no verification") {
    GroupContext c(2, 2);
    Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::None});
    CHECK(ch.steps[0].verified_by == StepCheck::None);
    REQUIRE(ch.final.has_value());
    CHECK(ch.final->term_count() == 5);  // construction identical, just unchecked
}

TEST_CASE("exponent-one groups are their own base case") {
    GroupContext c(5, 1);
    Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::Oracle});
    CHECK(ch.steps.empty());
    REQUIRE(ch.final.has_value());
    CHECK(*ch.final == Poly::generator(c, 0));
    CHECK(is_norm_one(*ch.final, SubgroupSpec(c, 1)));
}
