#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace normone {

// Base error for everything this library throws on bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters, mismatched contexts, malformed documents.
struct ParameterError : Error {
    using Error::Error;
};

// A norm-one (or other identity) check that was required to hold did not.
// Carries a short rendering of the offending normal form.
struct VerificationError : Error {
    VerificationError(const std::string& what, std::size_t residual_terms)
        : Error(what), residual_terms(residual_terms) {}
    std::size_t residual_terms;
};

// The acting group: cyclic of order p^n with a distinguished generator.
// Exponents of the generator are reduced mod p^n; subgroups are indexed by
// their exponent m (the subgroup of order p^m is generated by the p^{n-m}-th
// power of the generator).
class GroupContext {
public:
    GroupContext(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    std::uint32_t order() const { return order_; }

    // p^e for 0 <= e <= n.
    std::uint32_t power(int e) const;
    // Order of the subgroup with exponent m, i.e. p^m.
    std::uint32_t subgroup_order(int m) const { return power(checked_exponent(m)); }
    // Generator power that generates the exponent-m subgroup: p^{n-m}.
    std::uint32_t subgroup_step(int m) const { return power(n_ - checked_exponent(m)); }

    // Reduce an exponent into [0, order).
    std::uint32_t reduce(long long e) const;

    bool operator==(const GroupContext& o) const { return p_ == o.p_ && n_ == o.n_; }
    bool operator!=(const GroupContext& o) const { return !(*this == o); }

    // Throws ParameterError unless 0 <= m <= n.
    int checked_exponent(int m) const;

    std::string describe() const;

private:
    int p_;
    int n_;
    std::uint32_t order_;
};

// Throws ParameterError when the contexts differ; `where` names the operation.
void require_same_context(const GroupContext& a, const GroupContext& b, const char* where);

}  // namespace normone
