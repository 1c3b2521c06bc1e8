#include "normone/replay.hpp"

#include "normone/construction.hpp"
#include "normone/oracle.hpp"

namespace normone {

CoinducedElem::CoinducedElem(const GroupContext& ctx)
    : ctx_(ctx), values_(ctx.order(), Poly::zero(ctx)) {}

CoinducedElem::CoinducedElem(const GroupContext& ctx, std::vector<Poly> values)
    : ctx_(ctx), values_(std::move(values)) {
    if (values_.size() != ctx.order())
        throw ParameterError("co-induced element needs one value per group element");
    for (const Poly& v : values_) require_same_context(ctx_, v.ctx(), "co-induced element");
}

bool CoinducedElem::operator==(const CoinducedElem& o) const {
    return ctx_ == o.ctx_ && values_ == o.values_;
}

CoinducedElem CoinducedElem::operator+(const CoinducedElem& o) const {
    require_same_context(ctx_, o.ctx_, "co-induced add");
    std::vector<Poly> out;
    out.reserve(values_.size());
    for (std::size_t s = 0; s < values_.size(); ++s) out.push_back(values_[s] + o.values_[s]);
    return CoinducedElem(ctx_, std::move(out));
}

CoinducedElem CoinducedElem::operator-(const CoinducedElem& o) const {
    return *this + o.scale(-1);
}

CoinducedElem CoinducedElem::operator*(const CoinducedElem& o) const {
    require_same_context(ctx_, o.ctx_, "co-induced mul");
    std::vector<Poly> out;
    out.reserve(values_.size());
    for (std::size_t s = 0; s < values_.size(); ++s) out.push_back(values_[s] * o.values_[s]);
    return CoinducedElem(ctx_, std::move(out));
}

CoinducedElem CoinducedElem::scale(const Int& c) const {
    std::vector<Poly> out;
    out.reserve(values_.size());
    for (const Poly& v : values_) out.push_back(v.scale(c));
    return CoinducedElem(ctx_, std::move(out));
}

CoinducedElem CoinducedElem::translate(long long e) const {
    const std::uint32_t off = ctx_.reduce(e);
    std::vector<Poly> out;
    out.reserve(values_.size());
    for (std::uint32_t s = 0; s < values_.size(); ++s)
        out.push_back(values_[(s + off) % ctx_.order()]);
    return CoinducedElem(ctx_, std::move(out));
}

CoinducedElem CoinducedElem::apply(const Operator& op) const {
    require_same_context(ctx_, op.ctx(), "co-induced operator apply");
    CoinducedElem out(ctx_);
    for (const auto& [e, c] : op.terms()) out = out + translate(e).scale(c);
    return out;
}

CoinducedElem embed(const Poly& P) {
    const GroupContext& ctx = P.ctx();
    std::vector<Poly> out;
    out.reserve(ctx.order());
    for (std::uint32_t s = 0; s < ctx.order(); ++s) out.push_back(shift(P, s));
    return CoinducedElem(ctx, std::move(out));
}

CoinducedElem embed_level(const Poly& P, int m) {
    const GroupContext& ctx = P.ctx();
    ctx.checked_exponent(m);
    const std::uint32_t d = ctx.subgroup_step(m);
    std::vector<Poly> out(ctx.order(), Poly::zero(ctx));
    for (std::uint32_t s = 0; s < ctx.subgroup_order(m); ++s)
        out[static_cast<std::size_t>(s) * d % ctx.order()] =
            shift(P, static_cast<long long>(s) * d);
    return CoinducedElem(ctx, std::move(out));
}

CoinducedElem subgroup_indicator(const GroupContext& ctx, int m, int k) {
    ctx.checked_exponent(m);
    if (k < 1 || k > m) throw ParameterError("indicator needs 1 <= k <= m");
    const std::uint32_t sub = ctx.subgroup_step(m) * ctx.power(k);
    std::vector<Poly> out(ctx.order(), Poly::zero(ctx));
    for (std::uint32_t g = 0; g < ctx.order(); ++g)
        if (g % sub == 0) out[g] = Poly::unit(ctx);
    return CoinducedElem(ctx, std::move(out));
}

CoinducedElem indicator_potential(const Poly& x, int m, int k) {
    const GroupContext& ctx = x.ctx();
    ctx.checked_exponent(m);
    if (k < 1 || 2 * k > m) throw ParameterError("potential needs 1 <= k <= m/2");
    const std::uint32_t d = ctx.subgroup_step(m);
    const std::uint32_t sub_ord = ctx.power(k);
    Int coef = 1;
    for (int i = 0; i < m - 2 * k; ++i) coef *= ctx.p();

    std::vector<Poly> out(ctx.order(), Poly::zero(ctx));
    // psi(t^i) = psi(t^{i-1}) - phi(t^{i-1}) + p^{m-2k} t^{i-1}(x)
    for (std::uint32_t i = 1; i < ctx.subgroup_order(m); ++i) {
        const std::size_t prev = static_cast<std::size_t>(i - 1) * d % ctx.order();
        const std::size_t here = static_cast<std::size_t>(i) * d % ctx.order();
        Poly step = out[prev] + shift(x, static_cast<long long>(prev)).scale(coef);
        if ((i - 1) % sub_ord == 0) step = step - Poly::unit(ctx);
        out[here] = std::move(step);
    }
    return CoinducedElem(ctx, std::move(out));
}

namespace {

// Entrywise normal form; returns total surviving terms (0 = identity holds).
std::size_t residual_terms(const CoinducedElem& e, const RelationSet& rel) {
    std::size_t total = 0;
    for (std::uint32_t s = 0; s < e.ctx().order(); ++s)
        total += rel.normal_form(e.at(s)).term_count();
    return total;
}

}  // namespace

ReplayReport check_identities(const Poly& x, int m, int k) {
    const GroupContext& ctx = x.ctx();
    ctx.checked_exponent(m);
    if (m < 2 || k < 1 || 2 * k > m)
        throw ParameterError("replay needs 2 <= m and 1 <= k <= m/2");

    const std::uint32_t d = ctx.subgroup_step(m);
    const std::uint32_t sub = ctx.reduce(static_cast<long long>(d) * ctx.power(k));
    Int coef = 1;
    for (int i = 0; i < m - 2 * k; ++i) coef *= ctx.p();
    RelationSet rel = RelationSet::elementary(ctx);

    const CoinducedElem phi = subgroup_indicator(ctx, m, k);
    const CoinducedElem psi = indicator_potential(x, m, k);
    const CoinducedElem phi_x = embed_level(x, m);
    const CoinducedElem phi_1 = embed_level(Poly::unit(ctx), m);
    const Poly z = norm_defect(x, m, k);
    const Poly w = defect_witness(x, m, k);

    // Relative norm over the subgroup quotient: 1 + t + ... + t^{p^k - 1}.
    const Operator rel_norm = partial_sum_op(ctx, d, ctx.power(k));
    const Operator full_norm = norm_op(SubgroupSpec(ctx, m));
    const Operator one_minus_t =
        Operator::identity(ctx) - Operator::shift_term(ctx, d);
    const Operator sub_minus_one =
        Operator::shift_term(ctx, sub) - Operator::identity(ctx);

    ReplayReport rep;
    rep.m = m;
    rep.k = k;
    auto record = [&](const char* name, std::size_t resid) {
        rep.checks.push_back({name, resid == 0, resid});
    };

    // The relative norm spreads the subgroup indicator over the whole level.
    record("relative_norm_of_indicator",
           residual_terms(phi.apply(rel_norm) - phi_1, rel));
    // The full norm counts each level point |subgroup| times.
    record("full_norm_of_indicator",
           residual_terms(phi.apply(full_norm) - phi_1.scale(ctx.subgroup_order(m - k)), rel));
    // Centering by the weighted input kills the norm (uses N(x) = 1).
    record("norm_kills_centered_indicator",
           residual_terms((phi - phi_x.scale(coef)).apply(full_norm), rel));
    // phi = (1 - t)(psi) + coef * phi_x, wraparound entry included.
    record("indicator_coboundary_decomposition",
           residual_terms(phi - (psi.apply(one_minus_t) + phi_x.scale(coef)), rel));
    // (t^{p^k} - 1)(psi) is the embedded defect.
    record("potential_subgroup_difference_is_defect",
           residual_terms(psi.apply(sub_minus_one) - embed_level(z, m), rel));
    // psi - embedded witness is invariant under the subgroup.
    record("potential_minus_witness_invariant",
           residual_terms((psi - embed_level(w, m)).apply(sub_minus_one), rel));
    // (1 - t^{p^k})(psi) lies in the embedded ring: every level entry is the
    // translate of the entry at the identity.
    {
        CoinducedElem obj = psi.apply(Operator::identity(ctx) -
                                      Operator::shift_term(ctx, sub));
        std::size_t resid = 0;
        for (std::uint32_t s = 0; s < ctx.subgroup_order(m); ++s) {
            const std::size_t at = static_cast<std::size_t>(s) * d % ctx.order();
            Poly diff = obj.at(at) - shift(obj.at(0), static_cast<long long>(s) * d);
            resid += rel.normal_form(diff).term_count();
        }
        record("potential_difference_is_embedded", resid);
    }
    // The multiplier a = coef*x + (1-t)(w): its level embedding decomposes
    // through phi, and its relative norm is 1.
    {
        Poly a = x.scale(coef) + apply_operator(one_minus_t, w);
        CoinducedElem rhs =
            phi - (psi - embed_level(w, m)).apply(one_minus_t);
        std::size_t resid = residual_terms(embed_level(a, m) - rhs, rel);
        Poly rel_norm_a = rel.normal_form(apply_operator(rel_norm, a) - Poly::unit(ctx));
        resid += rel_norm_a.term_count();
        record("multiplier_norm_one_in_quotient", resid);
    }

    rep.all_ok = true;
    for (const IdentityCheck& c : rep.checks) rep.all_ok = rep.all_ok && c.ok;
    return rep;
}

}  // namespace normone
