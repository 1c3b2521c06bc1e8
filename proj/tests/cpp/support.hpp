#pragma once

// Shared helpers for the test suite: a deterministic generator for random
// polynomials and an independent single-rule reference reducer to check the
// production substitution oracle against.

#include <vector>

#include "normone/instances.hpp"
#include "normone/oracle.hpp"
#include "normone/poly.hpp"

namespace testsupport {

using namespace normone;

struct PolyGen {
    GroupContext ctx;
    SplitMix64 rng;

    PolyGen(const GroupContext& ctx, std::uint64_t seed) : ctx(ctx), rng(seed) {}

    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(rng.next() % n); }

    Word word(std::size_t max_deg) {
        Word w;
        const std::size_t len = below(static_cast<std::uint32_t>(max_deg + 1));
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(static_cast<Letter>(below(ctx.order())));
        return w;
    }

    // Up to max_terms random terms of degree <= max_deg, coefficients in
    // [-max_c, max_c] \ {0}.
    Poly poly(std::size_t max_deg = 4, std::size_t max_terms = 6, int max_c = 3) {
        std::vector<Poly::Term> terms;
        const std::size_t count = below(static_cast<std::uint32_t>(max_terms)) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            int c = static_cast<int>(below(static_cast<std::uint32_t>(2 * max_c))) - max_c;
            if (c >= 0) ++c;
            terms.push_back({word(max_deg), Int(c)});
        }
        return Poly::from_terms(ctx, std::move(terms));
    }
};

// Independent route to the normal form: rewrite one (the leftmost) eliminated
// letter at a time and repeat to a fixpoint.  Deliberately different from the
// production reducer's all-positions expansion.
inline Poly naive_normal_form(const Poly& P, const RelationSet& rel) {
    const GroupContext& ctx = P.ctx();
    Poly cur = P;
    while (true) {
        bool changed = false;
        std::vector<Poly::Term> next;
        for (const Poly::Term& t : cur.terms()) {
            std::size_t pos = t.word.size();
            for (std::size_t i = 0; i < t.word.size(); ++i)
                if (rel.eliminated(t.word[i])) {
                    pos = i;
                    break;
                }
            if (pos == t.word.size()) {
                next.push_back(t);
                continue;
            }
            changed = true;
            const Word head = t.word.substr(0, pos);
            const Word tail = t.word.substr(pos + 1);
            next.push_back({head + tail, t.coeff});
            const std::uint32_t rep =
                static_cast<std::uint32_t>(t.word[pos]) - rel.threshold();
            for (std::uint32_t i = 0; i + 1 < rel.coset_size(); ++i) {
                Word mid(1, static_cast<Letter>(rep + i * rel.stride()));
                next.push_back({head + mid + tail, -t.coeff});
            }
        }
        cur = Poly::from_terms(ctx, std::move(next));
        if (!changed) return cur;
    }
}

// A random element of the two-sided ideal the relations generate:
// sum of left * shift(relation_j, e) * right over a few random picks.
inline Poly random_ideal_element(PolyGen& gen, const RelationSet& rel) {
    const GroupContext& ctx = gen.ctx;
    Poly acc = Poly::zero(ctx);
    const std::size_t picks = gen.below(3) + 1;
    for (std::size_t i = 0; i < picks; ++i) {
        // relation_j = sum of the coset of j - 1
        const std::uint32_t j = gen.below(rel.stride());
        std::vector<Poly::Term> relation;
        for (std::uint32_t c = 0; c < rel.coset_size(); ++c)
            relation.push_back({Word(1, static_cast<Letter>(j + c * rel.stride())), Int(1)});
        relation.push_back({Word{}, Int(-1)});
        Poly base = Poly::from_terms(ctx, std::move(relation));
        base = shift(base, gen.below(ctx.order()));
        acc = acc + gen.poly(2, 3, 2) * base * gen.poly(2, 3, 2);
    }
    return acc;
}

}  // namespace testsupport
