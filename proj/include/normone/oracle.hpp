#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "normone/operators.hpp"
#include "normone/poly.hpp"

namespace normone {

// Rewriting presentation of the universal norm-one ring
//
//   Z<x[0..order-1]> / (sum of each coset of the distinguished subgroup = 1).
//
// For subgroup exponent r the cosets are {j, j+d, ..., j+(p^r-1)d} with
// d = p^{n-r}, one per j in [0, d).  The largest member of each coset is
// eliminated:
//
//   x[j + (p^r-1)d]  :=  1 - x[j] - x[j+d] - ... - x[j+(p^r-2)d],
//
// so the eliminated letters are exactly [ (p^r-1)d, order ) and the
// replacement right-hand sides contain no eliminated letters.  One
// simultaneous substitution pass is therefore confluent and idempotent.
//
// The library default (`RelationSet::elementary`) is r = 1: cosets of the
// unique order-p subgroup, which presents the ring where the subgroup norm of
// x is 1.  Larger r is used for step-local certificates.
class RelationSet {
public:
    static RelationSet elementary(const GroupContext& ctx) { return RelationSet(ctx, 1); }
    static RelationSet for_subgroup_exponent(const GroupContext& ctx, int r);

    const GroupContext& ctx() const { return ctx_; }
    int subgroup_exponent() const { return r_; }
    // Coset stride d = p^{n-r}; also the number of rewrite rules.
    std::uint32_t stride() const { return stride_; }
    // First eliminated letter: (p^r - 1) * d.
    std::uint32_t threshold() const { return threshold_; }
    std::uint32_t coset_size() const { return coset_size_; }
    bool eliminated(Letter l) const { return static_cast<std::uint32_t>(l) >= threshold_; }

    // Fully reduced representative: no eliminated letters remain.
    Poly normal_form(const Poly& P) const;

    // Streams the reduction of sigma^e(P) into `acc` without materializing
    // the shifted polynomial.  May throw TermAccumulator::Overflow when the
    // accumulator has a capacity limit.
    void reduce_shifted_into(TermAccumulator& acc, const Poly& P, std::uint32_t e) const;
    void reduce_word_into(TermAccumulator& acc, const Word& w, const Int& c,
                          std::uint32_t e) const;

private:
    RelationSet(const GroupContext& ctx, int r);
    GroupContext ctx_;
    int r_;
    std::uint32_t stride_;
    std::uint32_t threshold_;
    std::uint32_t coset_size_;
};

// normal_form under the default (r = 1) relations.
Poly normal_form(const Poly& P);

// Result of reducing a subgroup norm; `residual` is the normal form of
// N_H(P) minus 1, so the check passed iff residual is zero.
struct NormCheck {
    bool ok;
    Poly residual;
    // Diagnostics: reduction leaves processed and partition passes used.
    std::uint64_t leaves = 0;
    int passes = 1;
};

// Decides normal_form(N_H(P)) == 1 in the universal ring.  Exact, no
// sampling: the norm sum is reduced stagewise along the subgroup tower
// (order-p layers first, where the relations cancel most), each stage
// streamed through a bounded accumulator with hash-partitioned passes as a
// fallback, so peak memory stays bounded even for multi-million-term inputs.
// pass_capacity = 0 picks the default per-pass table size.
NormCheck reduce_norm(const Poly& P, const SubgroupSpec& H, const RelationSet& rel,
                      std::size_t pass_capacity = 0);
NormCheck reduce_norm(const Poly& P, const SubgroupSpec& H);
bool is_norm_one(const Poly& P, const SubgroupSpec& H);

// The normal form of N_H(P) itself (reduce_norm minus the final "- 1").
Poly norm_normal_form(const Poly& P, const SubgroupSpec& H, const RelationSet& rel);

enum class CountMode { Expanded, Reduced };

// Expanded: distinct monomials as written; Reduced: after normal_form.
std::size_t monomial_count(const Poly& P, CountMode mode);

// Monomial bound for one lift step: p^{m-k}(p^{m-k}-1)(p^k+1) + 1.
Int step_bound(int p, int m, int k);

// Closed-form bound for the one-exponent-at-a-time chain:
// p(p+1)(p^{n-1}-1)(p^n-1)/(p^2-1) + n - 1.  Equals the sum of the
// per-step bounds step_bound(p, m, 1) for m = 2..n.
Int unit_chain_bound(int p, int n);

}  // namespace normone
