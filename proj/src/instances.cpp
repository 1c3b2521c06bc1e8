#include "normone/instances.hpp"

namespace normone {

SquareMat SquareMat::zero(int dim) {
    SquareMat m;
    m.dim = dim;
    m.a.assign(static_cast<std::size_t>(dim) * dim, Int(0));
    return m;
}

SquareMat SquareMat::identity(int dim) {
    SquareMat m = zero(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

SquareMat SquareMat::operator+(const SquareMat& o) const {
    SquareMat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

SquareMat SquareMat::operator-(const SquareMat& o) const {
    SquareMat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

SquareMat SquareMat::operator*(const SquareMat& o) const {
    SquareMat r = zero(dim);
    for (int i = 0; i < dim; ++i)
        for (int t = 0; t < dim; ++t) {
            const Int& left = at(i, t);
            if (left == 0) continue;
            for (int j = 0; j < dim; ++j) r.at(i, j) += left * o.at(t, j);
        }
    return r;
}

SquareMat SquareMat::scale(const Int& c) const {
    SquareMat r = *this;
    for (auto& v : r.a) v *= c;
    return r;
}

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int SplitMix64::draw(int bound) {
    // Deterministic across platforms, unlike std::uniform_int_distribution.
    return static_cast<int>(next() % (2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
}

InstanceSpec random_instance(const GroupContext& ctx, InstanceKind kind, int dim,
                             std::uint64_t seed, int bound) {
    if (kind == InstanceKind::Scalar) dim = 1;
    if (dim < 1) throw ParameterError("instance dimension must be >= 1");
    if (bound < 1) throw ParameterError("instance entry bound must be >= 1");

    InstanceSpec inst{ctx, kind, dim, seed, bound, {}};
    inst.values.assign(ctx.order(), SquareMat::zero(dim));

    SplitMix64 rng(seed);
    const std::uint32_t stride = ctx.subgroup_step(1);
    // Free draws on all but the last member of each order-p coset; the last
    // member is solved from "coset sums to the unit", the relation the
    // universal ring imposes.
    for (std::uint32_t j = 0; j < stride; ++j) {
        SquareMat sum = SquareMat::zero(dim);
        for (int i = 0; i + 1 < ctx.p(); ++i) {
            SquareMat m = SquareMat::zero(dim);
            for (auto& v : m.a) v = rng.draw(bound);
            sum = sum + m;
            inst.values[j + static_cast<std::uint32_t>(i) * stride] = std::move(m);
        }
        inst.values[j + static_cast<std::uint32_t>(ctx.p() - 1) * stride] =
            SquareMat::identity(dim) - sum;
    }
    return inst;
}

MapElem evaluate(const Poly& P, const InstanceSpec& inst) {
    require_same_context(P.ctx(), inst.ctx, "evaluate");
    const GroupContext& ctx = inst.ctx;
    const int dim = inst.dim;
    MapElem out(ctx.order(), SquareMat::zero(dim));
    for (const Poly::Term& t : P.terms()) {
        for (std::uint32_t s = 0; s < ctx.order(); ++s) {
            SquareMat m = SquareMat::identity(dim);
            for (Letter l : t.word)
                m = m * inst.values[(static_cast<std::uint32_t>(l) + s) % ctx.order()];
            out[s] = out[s] + m.scale(t.coeff);
        }
    }
    return out;
}

bool check_numeric(const Poly& P, const InstanceSpec& inst, const SubgroupSpec& H) {
    require_same_context(P.ctx(), H.ctx, "numeric check");
    const GroupContext& ctx = inst.ctx;
    MapElem f = evaluate(P, inst);
    const SquareMat unit = SquareMat::identity(inst.dim);
    const std::uint32_t step = H.step();
    for (std::uint32_t s = 0; s < ctx.order(); ++s) {
        SquareMat acc = SquareMat::zero(inst.dim);
        for (std::uint32_t i = 0; i < H.order(); ++i)
            acc = acc + f[(s + i * step) % ctx.order()];
        if (!(acc == unit)) return false;
    }
    return true;
}

bool has_noncommuting_witness(const InstanceSpec& inst) {
    if (inst.dim < 2) return false;
    for (std::uint32_t g = 0; g < inst.ctx.order(); ++g)
        for (std::uint32_t h = g + 1; h < inst.ctx.order(); ++h) {
            const SquareMat& A = inst.values[g];
            const SquareMat& B = inst.values[h];
            if (!(A * B == B * A)) return true;
        }
    return false;
}

}  // namespace normone
