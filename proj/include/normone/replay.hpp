#pragma once

#include <string>
#include <vector>

#include "normone/operators.hpp"
#include "normone/poly.hpp"

namespace normone {

// An element of the co-induced module: a function from the group to the
// universal ring, i.e. one Poly per group element.  The group acts by
// translating the argument: (sigma^e . f)(sigma^s) = f(sigma^{s+e}).
// Operators act linearly through that action.
class CoinducedElem {
public:
    explicit CoinducedElem(const GroupContext& ctx);
    CoinducedElem(const GroupContext& ctx, std::vector<Poly> values);

    const GroupContext& ctx() const { return ctx_; }
    const Poly& at(std::uint32_t s) const { return values_.at(s); }
    std::size_t size() const { return values_.size(); }

    bool operator==(const CoinducedElem& o) const;
    CoinducedElem operator+(const CoinducedElem& o) const;
    CoinducedElem operator-(const CoinducedElem& o) const;
    CoinducedElem operator*(const CoinducedElem& o) const;  // pointwise
    CoinducedElem scale(const Int& c) const;
    CoinducedElem translate(long long e) const;  // the group action
    CoinducedElem apply(const Operator& op) const;

private:
    GroupContext ctx_;
    std::vector<Poly> values_;
};

// Equivariant embedding of the ring: entry at sigma^s is shift(P, s).
CoinducedElem embed(const Poly& P);

// Transported embedding for the exponent-m subgroup: supported on the powers
// of sigma^{p^{n-m}}, with entry at sigma^{s * p^{n-m}} equal to shift(P, s*p^{n-m}).
CoinducedElem embed_level(const Poly& P, int m);

// Indicator of the exponent-(m-k) subgroup inside the exponent-m level:
// value 1 exactly on the powers of sigma^{p^{n-m+k}}, else 0.
CoinducedElem subgroup_indicator(const GroupContext& ctx, int m, int k);

// Discrete potential of the indicator, built by the defining recurrence
//   psi(t^0) = 0,
//   psi(t^i) = psi(t^{i-1}) - phi(t^{i-1}) + p^{m-2k} t^{i-1}(x)
// along the exponent-m level (t = sigma^{p^{n-m}}); zero off the level.
CoinducedElem indicator_potential(const Poly& x, int m, int k);

struct IdentityCheck {
    std::string name;
    bool ok;
    std::size_t residual_terms;  // terms in the non-vanishing difference
};

struct ReplayReport {
    int m = 0;
    int k = 0;
    std::vector<IdentityCheck> checks;
    bool all_ok = false;
};

// Replays the derivation that powers one lift step as eight exact identities
// in the co-induced module over the universal ring, for an input x with
// N_{G_{m-k}}(x) = 1.  Every identity is checked entrywise (all group
// elements, wraparound included).
ReplayReport check_identities(const Poly& x, int m, int k);

}  // namespace normone
