#include "normone/construction.hpp"

#include <algorithm>

#include "normone/serialize.hpp"

namespace normone {

namespace {

void require_step_shape(const GroupContext& ctx, int m, int k) {
    ctx.checked_exponent(m);
    if (m < 2 || k < 1 || 2 * k > m)
        throw ParameterError("lift step needs 2 <= m and 1 <= k <= m/2, got m=" +
                             std::to_string(m) + " k=" + std::to_string(k));
}

Int scalar_weight(int p, int m, int k) {
    // p^{m-2k}; integral because k <= m/2.
    Int r = 1;
    for (int i = 0; i < m - 2 * k; ++i) r *= p;
    return r;
}

// Accumulate shift(P, e) into acc.
void add_shifted(TermAccumulator& acc, const Poly& P, std::uint32_t e) {
    const std::uint32_t order = P.ctx().order();
    Word buf;
    for (const Poly::Term& t : P.terms()) {
        buf.clear();
        for (Letter l : t.word)
            buf.push_back(static_cast<Letter>((static_cast<std::uint32_t>(l) + e) % order));
        acc.add(buf, t.coeff);
    }
}

std::string residual_note(const Poly& residual) {
    std::string text = poly_to_text(residual);
    if (text.size() > 400) text = text.substr(0, 400) + " ...";
    return text;
}

}  // namespace

Poly norm_defect(const Poly& X, int m, int k) {
    const GroupContext& ctx = X.ctx();
    require_step_shape(ctx, m, k);
    Operator psum = partial_sum_op(ctx, ctx.subgroup_step(m), ctx.power(k));
    return psum.apply(X).scale(scalar_weight(ctx.p(), m, k)) - Poly::unit(ctx);
}

Poly defect_witness(const Poly& X, int m, int k) {
    const GroupContext& ctx = X.ctx();
    require_step_shape(ctx, m, k);
    Poly z = norm_defect(X, m, k);
    // u is the step of the order-p^{m-k} subgroup the input is norm-one for.
    const std::uint32_t u = ctx.subgroup_step(m - k);
    const std::uint32_t r = ctx.subgroup_order(m - k);
    TermAccumulator acc;
    for (std::uint32_t i = 1; i < r; ++i) {
        Poly block = X * shift(z, -static_cast<long long>(i) * u);
        for (std::uint32_t j = 0; j < i; ++j)
            add_shifted(acc, block, ctx.reduce(static_cast<long long>(j) * u));
    }
    return acc.freeze(ctx);
}

Poly solve_coboundary(const Poly& x_wit, const Poly& z, const SubgroupSpec& H, bool check) {
    require_same_context(x_wit.ctx(), z.ctx(), "coboundary");
    require_same_context(x_wit.ctx(), H.ctx, "coboundary");
    const GroupContext& ctx = x_wit.ctx();
    RelationSet rel = RelationSet::elementary(ctx);
    if (check) {
        NormCheck nx = reduce_norm(x_wit, H, rel);
        if (!nx.ok)
            throw VerificationError(
                "coboundary witness is not norm-one for the subgroup; residual: " +
                    residual_note(nx.residual),
                nx.residual.term_count());
        Poly nz = norm_normal_form(z, H, rel);
        if (!nz.is_zero())
            throw VerificationError(
                "coboundary right-hand side is not norm-zero; normal form: " + residual_note(nz),
                nz.term_count());
    }
    const std::uint32_t t = H.step();
    const std::uint32_t r = H.order();
    TermAccumulator acc;
    for (std::uint32_t i = 1; i < r; ++i) {
        Poly block = x_wit * shift(z, -static_cast<long long>(i) * t);
        for (std::uint32_t j = 0; j < i; ++j)
            add_shifted(acc, block, ctx.reduce(static_cast<long long>(j) * t));
    }
    Poly w = acc.freeze(ctx);
    if (check) {
        Poly delta = rel.normal_form(shift(w, t) - w - z);
        if (!delta.is_zero())
            throw VerificationError(
                "coboundary identity failed; normal form of the defect: " + residual_note(delta),
                delta.term_count());
    }
    return w;
}

namespace {

Poly build_multiplier(const Poly& X, const Poly& w, int m, int k) {
    const GroupContext& ctx = X.ctx();
    const std::uint32_t t = ctx.subgroup_step(m);
    return X.scale(scalar_weight(ctx.p(), m, k)) + (w - shift(w, t));
}

}  // namespace

Poly generic_step_multiplier(int p, int m, int k) {
    GroupContext local(p, m);
    Poly x = Poly::generator(local, 0);
    Poly w = defect_witness(x, m, k);
    return build_multiplier(x, w, m, k);
}

bool certify_step(int p, int m, int k) {
    GroupContext local(p, m);
    require_step_shape(local, m, k);
    Poly a = generic_step_multiplier(p, m, k);
    Poly out = a * Poly::generator(local, 0);
    // Relations of the order-p^{m-k} subgroup: exactly the hypothesis the
    // step's input satisfies.  Norm over the whole local group must be 1.
    RelationSet rel = RelationSet::for_subgroup_exponent(local, m - k);
    return reduce_norm(out, SubgroupSpec(local, m), rel).ok;
}

std::vector<std::pair<int, int>> unit_schedule(int n) {
    std::vector<std::pair<int, int>> s;
    for (int m = 2; m <= n; ++m) s.push_back({m, 1});
    return s;
}

std::vector<std::pair<int, int>> doubling_schedule(int n) {
    std::vector<std::pair<int, int>> s;
    int reached = 1;
    while (reached < n) {
        int next = std::min(2 * reached, n);
        s.push_back({next, next - reached});
        reached = next;
    }
    return s;
}

void validate_schedule(const GroupContext& ctx, const std::vector<std::pair<int, int>>& s) {
    if (ctx.n() == 1) {
        if (!s.empty()) throw ParameterError("exponent-1 group needs an empty schedule");
        return;
    }
    if (s.empty()) throw ParameterError("schedule must not be empty for exponent >= 2");
    int reached = 1;
    for (const auto& [m, k] : s) {
        require_step_shape(ctx, m, k);
        if (m - k != reached)
            throw ParameterError("schedule step (" + std::to_string(m) + ", " + std::to_string(k) +
                                 ") does not chain from exponent " + std::to_string(reached));
        reached = m;
    }
    if (reached != ctx.n())
        throw ParameterError("schedule stops at exponent " + std::to_string(reached) +
                             ", expected " + std::to_string(ctx.n()));
}

namespace {

// Conservative pre-merge size estimates used for the term budget.
Int predicted_step_size(const Poly& X, int m, int k) {
    const GroupContext& ctx = X.ctx();
    Int nx = X.term_count();
    Int nz = Int(ctx.power(k)) * nx + 1;
    Int r = ctx.subgroup_order(m - k);
    Int w_premerge = nx * nz * r * (r - 1) / 2;
    Int a_premerge = 2 * w_premerge + nx;
    return a_premerge * nx;  // output = a * X
}

}  // namespace

Chain generate(const GroupContext& ctx, const GenerateOptions& opts) {
    std::vector<std::pair<int, int>> schedule;
    switch (opts.strategy) {
        case Strategy::Unit: schedule = unit_schedule(ctx.n()); break;
        case Strategy::Doubling: schedule = doubling_schedule(ctx.n()); break;
        case Strategy::Explicit: schedule = opts.schedule; break;
    }
    validate_schedule(ctx, schedule);

    Chain chain{ctx, schedule, {}, std::nullopt};
    RelationSet rel = RelationSet::elementary(ctx);

    std::optional<Poly> X = Poly::generator(ctx, 0);
    if (opts.verify == StepCheck::Oracle) {
        // Base of the chain: the generator is norm-one for the order-p
        // subgroup by the defining relations.
        NormCheck base = reduce_norm(*X, SubgroupSpec(ctx, 1), rel);
        if (!base.ok)
            throw VerificationError("base generator failed the norm-one check; residual: " +
                                        residual_note(base.residual),
                                    base.residual.term_count());
    }

    for (const auto& [m, k] : schedule) {
        Poly step_a = generic_step_multiplier(ctx.p(), m, k);
        Poly step_out = step_a * Poly::generator(GroupContext(ctx.p(), m), 0);
        LiftStep step(m, k, std::move(step_a), std::move(step_out));
        step.step_monomials = step.step_multiplier.term_count();
        step.bound = step_bound(ctx.p(), m, k);

        bool can_expand =
            X.has_value() &&
            predicted_step_size(*X, m, k) <= Int(static_cast<std::uint64_t>(opts.term_budget));
        if (can_expand) {
            Poly z = norm_defect(*X, m, k);
            Poly w = defect_witness(*X, m, k);
            Poly a = build_multiplier(*X, w, m, k);
            Poly out = a * *X;
            step.defect = std::move(z);
            step.witness = std::move(w);
            step.multiplier = std::move(a);
            step.output = std::move(out);
            step.expanded = true;
        }

        switch (opts.verify) {
            case StepCheck::None: break;
            case StepCheck::Certificate: {
                if (!certify_step(ctx.p(), m, k))
                    throw VerificationError("step certificate failed at (m=" + std::to_string(m) +
                                                ", k=" + std::to_string(k) + ")",
                                            0);
                step.verified_by = StepCheck::Certificate;
                break;
            }
            case StepCheck::Oracle: {
                if (step.expanded) {
                    NormCheck nc = reduce_norm(*step.output, SubgroupSpec(ctx, m), rel);
                    if (!nc.ok)
                        throw VerificationError(
                            "step output failed the norm-one check at (m=" + std::to_string(m) +
                                ", k=" + std::to_string(k) +
                                "); residual: " + residual_note(nc.residual),
                            nc.residual.term_count());
                    step.verified_by = StepCheck::Oracle;
                } else {
                    // Too large to materialize: fall back to the exact
                    // step-local certificate.
                    if (!certify_step(ctx.p(), m, k))
                        throw VerificationError("step certificate failed at (m=" +
                                                    std::to_string(m) + ", k=" + std::to_string(k) +
                                                    ")",
                                                0);
                    step.verified_by = StepCheck::Certificate;
                }
                break;
            }
        }

        X = step.output;  // nullopt once expansion stops
        chain.steps.push_back(std::move(step));
    }

    if (ctx.n() == 1) {
        chain.final = Poly::generator(ctx, 0);
    } else if (!chain.steps.empty() && chain.steps.back().expanded) {
        chain.final = chain.steps.back().output;
    }
    return chain;
}

}  // namespace normone
