#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "normone/operators.hpp"
#include "normone/poly.hpp"

namespace normone {

// Square integer matrix, row-major; dim = 1 doubles as a scalar.
struct SquareMat {
    int dim = 1;
    std::vector<Int> a;  // dim*dim entries

    static SquareMat zero(int dim);
    static SquareMat identity(int dim);
    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
    bool operator==(const SquareMat& o) const { return dim == o.dim && a == o.a; }
    SquareMat operator+(const SquareMat& o) const;
    SquareMat operator-(const SquareMat& o) const;
    SquareMat operator*(const SquareMat& o) const;
    SquareMat scale(const Int& c) const;
};

enum class InstanceKind { Scalar, Matrix };

// A concrete model of the universal ring: the ring Map(G, S) of S-valued
// functions on the group (S = Z or d x d integer matrices) with pointwise
// operations, where the generator translates the argument.  The generator
// image f_x is drawn so that every coset of the order-p subgroup sums to the
// unit, which is exactly the relation the universal ring imposes.
struct InstanceSpec {
    GroupContext ctx;
    InstanceKind kind = InstanceKind::Scalar;
    int dim = 1;
    std::uint64_t seed = 0;
    int bound = 3;  // free entries drawn from [-bound, bound]
    // f_x(sigma^g) for each g in [0, order).
    std::vector<SquareMat> values;
};

// Deterministic generator (splitmix64) so instances are reproducible across
// platforms; draws free positions uniformly from [-bound, bound] and solves
// the last member of each coset from the unit-sum constraint.
InstanceSpec random_instance(const GroupContext& ctx, InstanceKind kind, int dim,
                             std::uint64_t seed, int bound = 3);

// A ring element of the instance: one matrix per group element.
using MapElem = std::vector<SquareMat>;

MapElem evaluate(const Poly& P, const InstanceSpec& inst);

// True iff the H-norm of P evaluates to the constant-one function:
// sum over i < |H| of the translate of evaluate(P) by i*step equals unit.
bool check_numeric(const Poly& P, const InstanceSpec& inst, const SubgroupSpec& H);

// Guards against silently testing in a commutative model: finds a pair of
// translates of f_x that fail to commute somewhere.  Always false for
// scalar instances and dim 1.
bool has_noncommuting_witness(const InstanceSpec& inst);

// The deterministic stream behind random_instance, exposed for tests.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // Uniform-ish draw from [-bound, bound].
    int draw(int bound);
};

}  // namespace normone
