#include "normone/operators.hpp"

#include <algorithm>
#include <map>

namespace normone {

Poly shift(const Poly& P, long long e) {
    const GroupContext& ctx = P.ctx();
    std::uint32_t off = ctx.reduce(e);
    if (off == 0) return P;
    std::vector<Poly::Term> out;
    out.reserve(P.term_count());
    Word buf;
    for (const Poly::Term& t : P.terms()) {
        buf.clear();
        for (Letter l : t.word)
            buf.push_back(static_cast<Letter>((static_cast<std::uint32_t>(l) + off) % ctx.order()));
        out.push_back({buf, t.coeff});
    }
    // Letterwise shifting permutes words within a degree, so re-canonicalize.
    return Poly::from_terms(ctx, std::move(out));
}

Operator Operator::identity(const GroupContext& ctx) { return shift_term(ctx, 0); }

Operator Operator::shift_term(const GroupContext& ctx, long long e, Int c) {
    Operator op(ctx);
    if (c != 0) op.terms_.push_back({ctx.reduce(e), std::move(c)});
    return op;
}

Operator Operator::from_terms(const GroupContext& ctx,
                              std::vector<std::pair<std::uint32_t, Int>> terms) {
    Operator op(ctx);
    for (auto& [e, c] : terms) {
        if (e >= ctx.order())
            throw ParameterError("operator exponent " + std::to_string(e) +
                                 " outside group of order " + std::to_string(ctx.order()));
        op.terms_.push_back({e, std::move(c)});
    }
    op.canonicalize();
    return op;
}

void Operator::canonicalize() {
    std::map<std::uint32_t, Int> merged;
    for (auto& [e, c] : terms_) merged[e] += c;
    terms_.clear();
    for (auto& [e, c] : merged)
        if (c != 0) terms_.push_back({e, std::move(c)});
}

bool Operator::operator==(const Operator& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
}

Operator Operator::operator+(const Operator& o) const {
    require_same_context(ctx_, o.ctx_, "operator add");
    Operator r(ctx_);
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.canonicalize();
    return r;
}

Operator Operator::operator-() const {
    Operator r(ctx_);
    r.terms_ = terms_;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Operator Operator::operator-(const Operator& o) const { return *this + (-o); }

Operator Operator::scale(const Int& c) const {
    Operator r(ctx_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, k] : r.terms_) k *= c;
    return r;
}

Operator Operator::operator*(const Operator& o) const {
    require_same_context(ctx_, o.ctx_, "operator mul");
    Operator r(ctx_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.terms_.push_back({ctx_.reduce(static_cast<long long>(e1) + e2), c1 * c2});
    r.canonicalize();
    return r;
}

Poly Operator::apply(const Poly& P) const {
    require_same_context(ctx_, P.ctx(), "operator apply");
    TermAccumulator acc(P.term_count() * terms_.size() / 2 + 4);
    Word buf;
    for (const auto& [e, c] : terms_) {
        for (const Poly::Term& t : P.terms()) {
            buf.clear();
            for (Letter l : t.word)
                buf.push_back(
                    static_cast<Letter>((static_cast<std::uint32_t>(l) + e) % ctx_.order()));
            acc.add(buf, t.coeff * c);
        }
    }
    return acc.freeze(ctx_);
}

Operator norm_op(const SubgroupSpec& H) {
    return partial_sum_op(H.ctx, H.step(), H.order());
}

Operator partial_sum_op(const GroupContext& ctx, std::uint32_t d, std::uint32_t count) {
    std::vector<std::pair<std::uint32_t, Int>> terms;
    terms.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i)
        terms.push_back({ctx.reduce(static_cast<long long>(i) * d), 1});
    return Operator::from_terms(ctx, std::move(terms));
}

Poly apply_operator(const Operator& op, const Poly& P) { return op.apply(P); }

}  // namespace normone
