#include "normone/context.hpp"

namespace normone {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

GroupContext::GroupContext(int p, int n) : p_(p), n_(n) {
    if (!is_prime(p))
        throw ParameterError("group order base must be prime, got " + std::to_string(p));
    if (n < 1) throw ParameterError("group exponent must be >= 1, got " + std::to_string(n));
    // Letters are 16-bit, so the order must fit in [0, 2^16].
    std::uint64_t order = 1;
    for (int i = 0; i < n; ++i) {
        order *= static_cast<std::uint64_t>(p);
        if (order > (1u << 16))
            throw ParameterError("group order " + std::to_string(p) + "^" + std::to_string(n) +
                                 " exceeds the supported maximum 2^16");
    }
    order_ = static_cast<std::uint32_t>(order);
}

std::uint32_t GroupContext::power(int e) const {
    if (e < 0 || e > n_)
        throw ParameterError("power exponent " + std::to_string(e) + " outside [0, " +
                             std::to_string(n_) + "]");
    std::uint32_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::uint32_t>(p_);
    return r;
}

std::uint32_t GroupContext::reduce(long long e) const {
    long long m = e % static_cast<long long>(order_);
    if (m < 0) m += order_;
    return static_cast<std::uint32_t>(m);
}

int GroupContext::checked_exponent(int m) const {
    if (m < 0 || m > n_)
        throw ParameterError("subgroup exponent " + std::to_string(m) + " outside [0, " +
                             std::to_string(n_) + "]");
    return m;
}

std::string GroupContext::describe() const {
    return "Z/" + std::to_string(p_) + "^" + std::to_string(n_);
}

void require_same_context(const GroupContext& a, const GroupContext& b, const char* where) {
    if (a != b)
        throw ParameterError(std::string(where) + ": mixed group contexts " + a.describe() +
                             " and " + b.describe());
}

}  // namespace normone
