#include "normone/oracle.hpp"

#include <algorithm>

namespace normone {

RelationSet::RelationSet(const GroupContext& ctx, int r) : ctx_(ctx), r_(r) {
    if (r < 1 || r > ctx.n())
        throw ParameterError("relation subgroup exponent " + std::to_string(r) + " outside [1, " +
                             std::to_string(ctx.n()) + "]");
    stride_ = ctx.subgroup_step(r);
    coset_size_ = ctx.subgroup_order(r);
    threshold_ = (coset_size_ - 1) * stride_;
}

RelationSet RelationSet::for_subgroup_exponent(const GroupContext& ctx, int r) {
    return RelationSet(ctx, r);
}

namespace {

// Expands the reduction of one shifted word into the accumulator.  Every
// eliminated letter branches into the constant choice (sign +) and the
// coset_size-1 surviving coset members (sign -).  Returns leaves produced.
struct WordReducer {
    const RelationSet& rel;
    std::uint32_t order;
    TermAccumulator& acc;
    std::vector<Letter> shifted;
    Word buf;
    const Int* coeff = nullptr;
    Int neg_coeff;
    std::uint64_t leaves = 0;

    WordReducer(const RelationSet& r, TermAccumulator& a)
        : rel(r), order(r.ctx().order()), acc(a) {}

    std::uint64_t run(const Word& w, const Int& c, std::uint32_t e) {
        shifted.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            shifted[i] = static_cast<Letter>((static_cast<std::uint32_t>(w[i]) + e) % order);
        buf.clear();
        coeff = &c;
        neg_coeff = -c;
        std::uint64_t before = leaves;
        descend(0, false);
        return leaves - before;
    }

    void descend(std::size_t pos, bool neg) {
        if (pos == shifted.size()) {
            ++leaves;
            acc.add(buf, neg ? neg_coeff : *coeff);
            return;
        }
        Letter l = shifted[pos];
        if (!rel.eliminated(l)) {
            buf.push_back(l);
            descend(pos + 1, neg);
            buf.pop_back();
            return;
        }
        // the constant 1 from the relation right-hand side
        descend(pos + 1, neg);
        std::uint32_t rep = static_cast<std::uint32_t>(l) - rel.threshold();
        for (std::uint32_t i = 0; i + 1 < rel.coset_size(); ++i) {
            buf.push_back(static_cast<Letter>(rep + i * rel.stride()));
            descend(pos + 1, !neg);
            buf.pop_back();
        }
    }
};

}  // namespace

void RelationSet::reduce_word_into(TermAccumulator& acc, const Word& w, const Int& c,
                                   std::uint32_t e) const {
    WordReducer red(*this, acc);
    red.run(w, c, e);
}

void RelationSet::reduce_shifted_into(TermAccumulator& acc, const Poly& P, std::uint32_t e) const {
    require_same_context(ctx_, P.ctx(), "normal form");
    WordReducer red(*this, acc);
    for (const Poly::Term& t : P.terms()) red.run(t.word, t.coeff, e);
}

Poly RelationSet::normal_form(const Poly& P) const {
    require_same_context(ctx_, P.ctx(), "normal form");
    TermAccumulator acc(P.term_count() + 4);
    reduce_shifted_into(acc, P, 0);
    return acc.freeze(ctx_);
}

Poly normal_form(const Poly& P) { return RelationSet::elementary(P.ctx()).normal_form(P); }

namespace {

constexpr std::size_t kDefaultPassCapacity = std::size_t(1) << 23;
constexpr int kMaxPartitions = 1024;

// One tower stage: reduce sum_{a < p} shift(R, a * stage_step), partitioned
// into `parts` hash classes when a single table overflows.
std::vector<Poly::Term> reduce_stage(const RelationSet& rel, std::span<const Poly::Term> input,
                                     std::uint32_t stage_step, int p, std::size_t cap,
                                     std::uint64_t& leaves, int& parts) {
    const GroupContext& ctx = rel.ctx();
    while (true) {
        std::vector<Poly::Term> out;
        bool overflowed = false;
        for (int klass = 0; klass < parts && !overflowed; ++klass) {
            TermAccumulator acc(std::min<std::size_t>(cap, 1 << 16));
            acc.set_capacity_limit(cap);
            if (parts > 1) acc.set_partition(static_cast<std::uint64_t>(parts),
                                             static_cast<std::uint64_t>(klass));
            WordReducer red(rel, acc);
            try {
                for (int a = 0; a < p; ++a) {
                    std::uint32_t e = ctx.reduce(static_cast<long long>(a) * stage_step);
                    for (const Poly::Term& t : input) red.run(t.word, t.coeff, e);
                }
            } catch (const TermAccumulator::Overflow&) {
                overflowed = true;
            }
            leaves += red.leaves;
            if (!overflowed) {
                auto part = acc.drain_sorted();
                out.insert(out.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
            }
        }
        if (!overflowed) {
            std::sort(out.begin(), out.end(), [](const Poly::Term& a, const Poly::Term& b) {
                return word_less(a.word, b.word);
            });
            return out;
        }
        parts *= 4;
        if (parts > kMaxPartitions)
            throw Error("norm reduction exceeded the memory budget even with " +
                        std::to_string(kMaxPartitions) + " partitions");
    }
}

}  // namespace

NormCheck reduce_norm(const Poly& P, const SubgroupSpec& H, const RelationSet& rel,
                      std::size_t pass_capacity) {
    require_same_context(P.ctx(), H.ctx, "norm check");
    require_same_context(P.ctx(), rel.ctx(), "norm check");
    const GroupContext& ctx = P.ctx();
    const std::size_t cap = pass_capacity ? pass_capacity : kDefaultPassCapacity;
    const int p = ctx.p();

    NormCheck result{false, Poly::zero(ctx)};
    int parts = 1;

    // Stage 0: bring the input itself to normal form.
    std::vector<Poly::Term> cur =
        reduce_stage(rel, P.terms(), 0, 1, cap, result.leaves, parts);

    // Tower stages, innermost (order-p) subgroup first: after stage l the
    // terms hold the normal form of sum_{i < p^l} shift(P, i * d * p^{m-l}).
    const std::uint32_t d = H.step();
    for (int level = 1; level <= H.m; ++level) {
        std::uint32_t stage_step =
            ctx.reduce(static_cast<long long>(d) * ctx.power(H.m - level));
        cur = reduce_stage(rel, cur, stage_step, p, cap, result.leaves, parts);
    }

    // Residual = normal form of the norm, minus 1.
    TermAccumulator acc(cur.size() + 1);
    for (auto& t : cur) acc.add(std::move(t.word), t.coeff);
    acc.add(Word{}, Int(-1));
    result.residual = acc.freeze(ctx);
    result.ok = result.residual.is_zero();
    result.passes = parts;
    return result;
}

NormCheck reduce_norm(const Poly& P, const SubgroupSpec& H) {
    return reduce_norm(P, H, RelationSet::elementary(P.ctx()));
}

Poly norm_normal_form(const Poly& P, const SubgroupSpec& H, const RelationSet& rel) {
    NormCheck r = reduce_norm(P, H, rel);
    return r.residual + Poly::unit(P.ctx());
}

bool is_norm_one(const Poly& P, const SubgroupSpec& H) { return reduce_norm(P, H).ok; }

std::size_t monomial_count(const Poly& P, CountMode mode) {
    if (mode == CountMode::Expanded) return P.term_count();
    return normal_form(P).term_count();
}

namespace {

Int int_pow(int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

Int step_bound(int p, int m, int k) {
    if (p < 2) throw ParameterError("step bound needs p >= 2");
    if (m < 2 || k < 1 || 2 * k > m)
        throw ParameterError("step bound needs 1 <= k <= m/2, got m=" + std::to_string(m) +
                             " k=" + std::to_string(k));
    Int q = int_pow(p, m - k);
    return q * (q - 1) * (int_pow(p, k) + 1) + 1;
}

Int unit_chain_bound(int p, int n) {
    if (p < 2) throw ParameterError("chain bound needs p >= 2");
    if (n < 1) throw ParameterError("chain bound needs n >= 1");
    Int num = Int(p) * (p + 1) * (int_pow(p, n - 1) - 1) * (int_pow(p, n) - 1);
    Int den = Int(p) * p - 1;
    if (num % den != 0) throw Error("chain bound numerator not divisible by p^2 - 1");
    return num / den + (n - 1);
}

}  // namespace normone
