// Acceptance gate: one check per shipped guarantee, one PASS/FAIL line each.
// Exit status is the number of failed checks.  Every check is exact integer
// arithmetic end to end; measured wall times are printed for the heavier ones.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "normone/construction.hpp"
#include "normone/instances.hpp"
#include "normone/lattice.hpp"
#include "normone/oracle.hpp"
#include "normone/replay.hpp"
#include "normone/serialize.hpp"

using namespace normone;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion(int number, const std::string& title,
               const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        std::cout << "PASS criterion " << number << ": " << title;
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << title << " -- " << e.what() << "\n";
    }
    std::cout.flush();
}

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

Poly term_list(const GroupContext& c, std::vector<std::pair<int, std::vector<int>>> spec) {
    std::vector<Poly::Term> terms;
    for (auto& [coeff, letters] : spec) {
        Word w;
        for (int l : letters) w.push_back(static_cast<Letter>(l));
        terms.push_back({std::move(w), Int(coeff)});
    }
    return Poly::from_terms(c, std::move(terms));
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

}  // namespace

int main() {
    // 1. The order-4 construction, the reference form: five monomials.
    criterion(1, "p=2 chain output matches the reference five-monomial element", [] {
        auto t0 = std::chrono::steady_clock::now();
        GroupContext c(2, 2);
        Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::Oracle});
        require(ch.final.has_value(), "no final element");
        Poly expected = term_list(c, {{1, {1, 0}},
                                      {1, {0, 2, 0}},
                                      {1, {0, 3, 0}},
                                      {-1, {1, 0, 0}},
                                      {-1, {1, 3, 0}}});
        require(*ch.final == expected, "terms differ from the reference element");
        require(ch.final->term_count() == 5, "expected exactly 5 monomials");
        double dt = seconds_since(t0);
        require(dt < 1.0, "runtime exceeded 1s");
        return "5 monomials, exact integer match, " + fmt_seconds(dt);
    });

    // 2. The order-9 construction: 22 monomials, coefficient 2 on s1*s0.
    criterion(2, "p=3 chain output matches the reference 22-monomial element", [] {
        auto t0 = std::chrono::steady_clock::now();
        GroupContext c(3, 2);
        Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::Oracle});
        require(ch.final.has_value(), "no final element");
        Poly expected = term_list(
            c, {{-1, {0, 0}},    {2, {1, 0}},     {-1, {3, 0}},    {1, {4, 0}},
                {1, {0, 3, 0}},  {1, {0, 4, 0}},  {1, {0, 5, 0}},  {1, {0, 6, 0}},
                {1, {0, 7, 0}},  {1, {0, 8, 0}},  {-1, {1, 4, 0}}, {-1, {1, 5, 0}},
                {-1, {1, 6, 0}}, {-1, {1, 7, 0}}, {-1, {1, 8, 0}}, {-1, {1, 0, 0}},
                {1, {3, 6, 0}},  {1, {3, 7, 0}},  {1, {3, 8, 0}},  {-1, {4, 7, 0}},
                {-1, {4, 8, 0}}, {-1, {4, 0, 0}}});
        require(*ch.final == expected, "terms differ from the reference element");
        require(ch.final->term_count() == 22, "expected exactly 22 monomials");
        require(ch.final->coeff(Word{Letter(1), Letter(0)}) == 2,
                "expected coefficient 2 on the degree-2 leading term");
        double dt = seconds_since(t0);
        require(dt < 1.0, "runtime exceeded 1s");
        return "22 monomials, exact integer match, " + fmt_seconds(dt);
    });

    // 3. Reduction maps the first display onto the second, term for term.
    criterion(3, "normal form maps the p=2 element onto its reduced display", [] {
        auto t0 = std::chrono::steady_clock::now();
        GroupContext c(2, 2);
        Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::None});
        Poly reduced = term_list(c, {{2, {0, 0}},
                                     {-1, {0, 0, 0}},
                                     {-1, {0, 1, 0}},
                                     {-1, {1, 0, 0}},
                                     {1, {1, 1, 0}}});
        require(normal_form(*ch.final) == reduced, "reduced form differs");
        double dt = seconds_since(t0);
        require(dt < 1.0, "runtime exceeded 1s");
        return "exact match, " + fmt_seconds(dt);
    });

    // 4. The independent compact order-4 element verifies.
    criterion(4, "the compact alternative p=2 element is norm-one for the full group", [] {
        auto t0 = std::chrono::steady_clock::now();
        GroupContext c(2, 2);
        Poly x = Poly::generator(c, 0);
        Poly s = shift(x, 1);
        Poly alt = x * s * x + x * s - x * x * s;
        require(is_norm_one(alt, SubgroupSpec(c, 2)), "norm does not reduce to 1");
        double dt = seconds_since(t0);
        require(dt < 1.0, "runtime exceeded 1s");
        return "norm reduces to 1, " + fmt_seconds(dt);
    });

    // 5. Every step of every chain in the support matrix is norm-one at its
    //    own level.  One step's ambient form exceeds any reasonable memory
    //    budget and is verified by the exact step-local certificate instead;
    //    all other steps go through the direct oracle.
    criterion(5, "all chain steps in the support matrix verify norm-one", [] {
        auto t0 = std::chrono::steady_clock::now();
        struct Entry {
            int p, n;
            Strategy strategy;
            const char* label;
        };
        const std::vector<Entry> matrix = {
            {2, 2, Strategy::Unit, "(2,2) unit"},   {2, 3, Strategy::Unit, "(2,3) unit"},
            {2, 4, Strategy::Unit, "(2,4) unit"},   {2, 4, Strategy::Doubling, "(2,4) doubling"},
            {3, 2, Strategy::Unit, "(3,2) unit"},   {3, 3, Strategy::Unit, "(3,3) unit"},
            {5, 2, Strategy::Unit, "(5,2) unit"},
        };
        int oracle_steps = 0;
        int certificate_steps = 0;
        std::string certificate_notes;
        for (const Entry& e : matrix) {
            GroupContext c(e.p, e.n);
            // Oracle mode checks each materialized step output at its own
            // level and falls back to the step-local certificate when the
            // ambient expansion exceeds the term budget; it throws on any
            // failed check.
            Chain ch = generate(c, GenerateOptions{e.strategy, {}, StepCheck::Oracle});
            for (const LiftStep& s : ch.steps) {
                if (s.verified_by == StepCheck::Oracle) {
                    ++oracle_steps;
                } else if (s.verified_by == StepCheck::Certificate) {
                    ++certificate_steps;
                    certificate_notes += std::string(e.label) + " step (" + std::to_string(s.m) +
                                         "," + std::to_string(s.k) + ")";
                } else {
                    throw CheckFailure("step left unverified");
                }
            }
        }
        require(oracle_steps == 11, "expected 11 direct oracle steps, got " +
                                        std::to_string(oracle_steps));
        require(certificate_steps == 1,
                "expected exactly one certificate step, got " + std::to_string(certificate_steps));
        double dt = seconds_since(t0);
        return "12 steps: 11 by direct oracle, 1 by exact step-local certificate (" +
               certificate_notes + ", ambient form over the term budget); total " +
               fmt_seconds(dt) + " (target 300s)";
    });

    // 6. The derivation replays as eight exact identities at three instances.
    criterion(6, "derivation identities replay at (2,2,1), (3,2,1), and the (2,4) second step",
              [] {
                  auto t0 = std::chrono::steady_clock::now();
                  int checks = 0;
                  for (int p : {2, 3}) {
                      GroupContext c(p, 2);
                      ReplayReport rep = check_identities(Poly::generator(c, 0), 2, 1);
                      require(rep.all_ok && rep.checks.size() == 8,
                              "base replay failed at p=" + std::to_string(p));
                      checks += 8;
                  }
                  GroupContext c(2, 4);
                  Chain ch = generate(c, GenerateOptions{Strategy::Doubling, {}, StepCheck::None});
                  require(ch.steps.size() == 2 && ch.steps[0].output.has_value(),
                          "doubling chain shape unexpected");
                  ReplayReport rep = check_identities(*ch.steps[0].output, 4, 2);
                  require(rep.all_ok && rep.checks.size() == 8, "second-step replay failed");
                  checks += 8;
                  double dt = seconds_since(t0);
                  require(dt < 120.0, "runtime exceeded 2 minutes");
                  return std::to_string(checks) + " identity checks, all residuals empty, " +
                         fmt_seconds(dt);
              });

    // 7. The coboundary lemma, property-tested over random right-hand sides.
    criterion(7, "coboundary decomposition holds for 200 random right-hand sides", [] {
        auto t0 = std::chrono::steady_clock::now();
        int total = 0;
        for (int p : {2, 3}) {
            GroupContext c(p, 2);
            RelationSet rel = RelationSet::elementary(c);
            Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::None});
            for (int m = 1; m <= 2; ++m) {
                SubgroupSpec H(c, m);
                const std::uint32_t t = H.step();
                Poly x_wit = (m == 1) ? Poly::generator(c, 0) : *ch.final;
                SplitMix64 rng(4242u + static_cast<std::uint64_t>(10 * p + m));
                for (int trial = 0; trial < 50; ++trial) {
                    // Random v of degree <= 2 with entries in [-3, 3].
                    std::vector<Poly::Term> terms;
                    for (int i = 0; i < 5; ++i) {
                        Word w;
                        const int len = static_cast<int>(rng.next() % 3);
                        for (int l = 0; l < len; ++l)
                            w.push_back(static_cast<Letter>(rng.next() % c.order()));
                        int coeff = rng.draw(3);
                        if (coeff == 0) coeff = 1;
                        terms.push_back({std::move(w), Int(coeff)});
                    }
                    Poly v = Poly::from_terms(c, std::move(terms));
                    Poly z = shift(v, t) - v;
                    Poly w = solve_coboundary(x_wit, z, H, true);
                    require(rel.normal_form(shift(w, t) - w - z).is_zero(),
                            "decomposition failed");
                    ++total;
                }
            }
        }
        double dt = seconds_since(t0);
        return std::to_string(total) + " decompositions across H in {E, G}, p in {2, 3}, " +
               fmt_seconds(dt);
    });

    // 8. Per-step multiplier sizes against the guaranteed bound, including the
    //    two reference observations.
    criterion(8, "multiplier monomial counts stay within the per-step bounds", [] {
        struct Entry {
            int p, n;
            Strategy strategy;
        };
        const std::vector<Entry> matrix = {
            {2, 2, Strategy::Unit}, {2, 3, Strategy::Unit},     {2, 4, Strategy::Unit},
            {2, 4, Strategy::Doubling}, {3, 2, Strategy::Unit}, {3, 3, Strategy::Unit},
            {5, 2, Strategy::Unit},
        };
        int steps = 0;
        for (const Entry& e : matrix) {
            GroupContext c(e.p, e.n);
            Chain ch = generate(c, GenerateOptions{e.strategy, {}, StepCheck::None, 0});
            for (const LiftStep& s : ch.steps) {
                require(Int(s.step_monomials) <= s.bound,
                        "bound violated at p=" + std::to_string(e.p) + " step (" +
                            std::to_string(s.m) + "," + std::to_string(s.k) + ")");
                ++steps;
            }
        }
        // The two observed data points called out with the bound statement.
        Poly a22 = generic_step_multiplier(2, 2, 1);
        Poly a32 = generic_step_multiplier(3, 2, 1);
        require(a22.term_count() == 5 && step_bound(2, 2, 1) == 7, "(2,2,1) observation");
        require(a32.term_count() == 22 && step_bound(3, 2, 1) == 25, "(3,2,1) observation");
        return std::to_string(steps) + " steps within bounds; observed 5 <= 7 at (2,2,1) and "
               "22 <= 25 at (3,2,1)";
    });

    // 9. Numeric validation on concrete rings: scalars and matrix rings.
    criterion(9, "numeric checks pass on 20 seeds per kind at (2,2), (3,2), (2,3)", [] {
        auto t0 = std::chrono::steady_clock::now();
        int checks = 0;
        for (auto [p, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
            GroupContext c(p, n);
            Chain ch = generate(c, GenerateOptions{Strategy::Unit, {}, StepCheck::None});
            require(ch.final.has_value(), "no final element");
            SubgroupSpec G(c, n);
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                InstanceSpec sc = random_instance(c, InstanceKind::Scalar, 1, seed);
                require(check_numeric(*ch.final, sc, G), "scalar instance failed");
                InstanceSpec m2 = random_instance(c, InstanceKind::Matrix, 2, seed);
                require(has_noncommuting_witness(m2), "dim-2 instance unexpectedly commutative");
                require(check_numeric(*ch.final, m2, G), "dim-2 instance failed");
                InstanceSpec m3 = random_instance(c, InstanceKind::Matrix, 3, seed);
                require(has_noncommuting_witness(m3), "dim-3 instance unexpectedly commutative");
                require(check_numeric(*ch.final, m3, G), "dim-3 instance failed");
                checks += 3;
            }
        }
        double dt = seconds_since(t0);
        require(dt < 120.0, "runtime exceeded 2 minutes");
        return std::to_string(checks) +
               " instance checks, noncommutativity guard armed on every matrix instance, " +
               fmt_seconds(dt);
    });

    // 10. The lattice shadow: induced modules are cohomologically trivial,
    //     and the trivial module detects the group order.
    criterion(10, "Tate cohomology vanishes for regular representations and flags Z/p on Z", [] {
        auto t0 = std::chrono::steady_clock::now();
        int actions = 0;
        for (int p : {2, 3})
            for (int n = 1; n <= 3; ++n) {
                std::uint32_t order = 1;
                for (int i = 0; i < n; ++i) order *= static_cast<std::uint32_t>(p);
                for (std::uint32_t sub = 1; sub <= order; sub *= static_cast<std::uint32_t>(p)) {
                    LatticeAction act(cyclic_shift_matrix(order, order / sub), sub);
                    require(tate_h1(act).empty() && tate_h2(act).empty(),
                            "regular representation has nonvanishing cohomology");
                    ++actions;
                }
            }
        for (int p : {2, 3, 5}) {
            LatticeAction triv(IntMatrix::identity(1), static_cast<std::uint32_t>(p));
            require(tate_h1(triv).empty(), "trivial action h1 should vanish");
            require(tate_h2(triv) == std::vector<Int>{p}, "trivial action h2 should be Z/p");
        }
        double dt = seconds_since(t0);
        return std::to_string(actions) +
               " regular actions vanish; trivial Z/p on Z yields the single factor p, " +
               fmt_seconds(dt);
    });

    // 11. The asymptotic size claim is out of reach at desk scale; what ships
    //     instead: exact per-step bounds (criterion 8) plus measured counts
    //     for both strategies so the comparison is visible.
    criterion(11, "measured step sizes reported for unit vs doubling at n <= 4", [] {
        std::ostringstream report;
        for (int n = 2; n <= 4; ++n) {
            GroupContext c(2, n);
            auto counts = [&](Strategy s) {
                Chain ch = generate(c, GenerateOptions{s, {}, StepCheck::None, 0});
                std::string out = "[";
                for (std::size_t i = 0; i < ch.steps.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(ch.steps[i].step_monomials);
                }
                return out + "]";
            };
            if (n > 2) report << "; ";
            report << "n=" << n << " unit " << counts(Strategy::Unit) << " doubling "
                   << counts(Strategy::Doubling);
        }
        // Doubling's guarantee is never worse than unit's at the matching
        // schedule tail; spot-check the crossover at n = 4.
        require(step_bound(2, 4, 2) < step_bound(2, 4, 1),
                "doubling step bound should beat the unit bound at (2,4)");
        return report.str();
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << failures
              << " failures)\n";
    return failures;
}
