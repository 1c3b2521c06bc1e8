#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normone/oracle.hpp"
#include "normone/operators.hpp"
#include "normone/poly.hpp"

namespace normone {

// --- Single lift step -------------------------------------------------------
//
// Input: X with N_{G_{m-k}}(X) = 1 (subgroup of order p^{m-k}).
// Output: X_out = a * X with N_{G_m}(X_out) = 1, k levels up.
// Writing t for the shift by p^{n-m} (a generator of G_m):
//
//   defect      z = p^{m-2k} * (1 + t + ... + t^{p^k - 1})(X) - 1
//   witness     w = sum_{i=1}^{p^{m-k}-1} (1 + t' + ... + t'^{i-1})( X * t^{-i·?}... )
//   multiplier  a = p^{m-2k} X + (1 - t)(w)
//
// (precisely: with u = p^{n-m+k} the step of the order-p^{m-k} subgroup,
//  w = sum_{i=1}^{p^{m-k}-1} partial_sum_op(u, i)( X * shift(z, -i*u) ).)
// Requires 1 <= k <= m/2 so the scalar p^{m-2k} is integral.

// The defect z: norm-zero for the order-p^{m-k} subgroup.
Poly norm_defect(const Poly& X, int m, int k);

// The witness w: satisfies (shift-by-p^{n-m+k} - 1)(w) = defect.
Poly defect_witness(const Poly& X, int m, int k);

// Constructive form of the coboundary lemma: given x_wit with N_H(x_wit) = 1
// and z with N_H(z) = 0 (H = exponent-m subgroup generated by shift t), build
// w with (t - 1)(w) = z via w = sum_{i=1}^{|H|-1} psum_i( x_wit * t^{-i}(z) ).
// When `check` is set, both preconditions are verified with the oracle and a
// VerificationError carrying the offending normal form is thrown on failure.
Poly solve_coboundary(const Poly& x_wit, const Poly& z, const SubgroupSpec& H,
                      bool check = true);

enum class StepCheck {
    None,         // trust the construction
    Certificate,  // verify the generic step identity in the step-local ring
    Oracle,       // reduce the full subgroup norm of the output
};

struct LiftStep {
    LiftStep(int m, int k, Poly step_multiplier, Poly step_output)
        : m(m),
          k(k),
          step_multiplier(std::move(step_multiplier)),
          step_output(std::move(step_output)) {}

    int m;
    int k;
    // Ambient polynomials; absent when the expansion exceeded the term budget.
    std::optional<Poly> defect;      // z
    std::optional<Poly> witness;     // w
    std::optional<Poly> multiplier;  // a
    std::optional<Poly> output;      // a * X
    bool expanded = false;

    // The same step with the input treated as a single variable: polynomials
    // over GroupContext(p, m) in which x[i] stands for t^i(input).  Always
    // present, and the object the per-step monomial bound speaks about.
    Poly step_multiplier;  // a in step-local variables
    Poly step_output;      // a * x in step-local variables

    std::size_t step_monomials = 0;   // term_count(step_multiplier)
    Int bound = 0;                    // step_bound(p, m, k)
    StepCheck verified_by = StepCheck::None;
};

// Verifies the generic step identity once and for all in the step-local
// presented ring: over GroupContext(p, m) with the coset relations of the
// order-p^{m-k} subgroup, the normal form of N(a * x[0]) is 1.  Sound for
// every ambient instance: specializing x[i] |-> t^i(X) is a ring homomorphism
// compatible with the action, and the relations hold for X by hypothesis.
bool certify_step(int p, int m, int k);

// The step-local multiplier a over GroupContext(p, m) (input = x[0]).
Poly generic_step_multiplier(int p, int m, int k);

enum class Strategy { Unit, Doubling, Explicit };

struct GenerateOptions {
    Strategy strategy = Strategy::Doubling;
    // Explicit schedule as (m, k) pairs; used when strategy == Explicit.
    std::vector<std::pair<int, int>> schedule;
    StepCheck verify = StepCheck::Oracle;  // on by default
    // Skip materializing ambient polynomials whose predicted size exceeds
    // this many terms (the step-local data is still produced and certified).
    std::size_t term_budget = 40'000'000;
};

struct Chain {
    GroupContext ctx;
    std::vector<std::pair<int, int>> schedule;
    std::vector<LiftStep> steps;
    // Final norm-one element for the full group; absent if the last step
    // exceeded the term budget.
    std::optional<Poly> final;
};

// Schedules: Unit raises the exponent one at a time ((2,1), (3,1), ..., (n,1));
// Doubling doubles it ((2,1), (4,2), (8,4), ...) capping the last step at n.
std::vector<std::pair<int, int>> unit_schedule(int n);
std::vector<std::pair<int, int>> doubling_schedule(int n);
// Validates: first step has m - k = 1, consecutive steps chain (next m - k ==
// previous m), final m == n, and every step has 1 <= k <= m/2.
void validate_schedule(const GroupContext& ctx, const std::vector<std::pair<int, int>>& s);

// Run the whole chain from x[0] up to a norm-one element for the full group.
Chain generate(const GroupContext& ctx, const GenerateOptions& opts = {});

}  // namespace normone
