#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normone/context.hpp"

namespace normone {

// Exact integer coefficients.
using Int = boost::multiprecision::cpp_int;

// A monomial: a finite product of generators x[j], 0 <= j < order, stored as
// the sequence of generator indices.  Multiplication is concatenation; the
// empty word is the ring unit.  Letters fit in 16 bits, which caps the group
// order at 2^16 (enforced by GroupContext).
using Letter = char16_t;
using Word = std::u16string;

// Canonical monomial order: by degree, then lexicographically by letters.
bool word_less(const Word& a, const Word& b);

// An element of the free ring Z<x[0], ..., x[order-1]>.  Immutable once
// built: terms are sorted canonically, no zero coefficients, no duplicates.
// Term storage is shared between copies, so copying is O(1) even for
// multi-million-term values.
class Poly {
public:
    struct Term {
        Word word;
        Int coeff;
    };

    // The zero element of the given ring.
    static Poly zero(const GroupContext& ctx);
    // The multiplicative unit 1.
    static Poly unit(const GroupContext& ctx);
    // A single generator x[j].
    static Poly generator(const GroupContext& ctx, std::uint32_t j);
    // A single scalar c.
    static Poly constant(const GroupContext& ctx, Int c);
    // Canonicalize arbitrary (word, coeff) pairs: merge duplicates, drop zeros, sort.
    static Poly from_terms(const GroupContext& ctx, std::vector<Term> terms);

    const GroupContext& ctx() const { return ctx_; }
    std::span<const Term> terms() const { return *terms_; }
    std::size_t term_count() const { return terms_->size(); }
    bool is_zero() const { return terms_->empty(); }
    bool is_unit() const;
    // Largest word length present (0 for the zero element).
    std::size_t degree() const;
    // Coefficient of a word (0 when absent).
    Int coeff(const Word& w) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scale(const Int& c) const;

private:
    friend class TermAccumulator;
    Poly(GroupContext ctx, std::vector<Term> terms)
        : ctx_(ctx), terms_(std::make_shared<const std::vector<Term>>(std::move(terms))) {}

    GroupContext ctx_;
    std::shared_ptr<const std::vector<Term>> terms_;
};

// Hash-map accumulator used by every operation that merges many terms.
// Open addressing over power-of-two capacity so peak memory stays predictable
// even for multi-million-term intermediates.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t expected = 0);

    void add(const Word& w, const Int& c);
    void add(Word&& w, const Int& c);

    // Number of occupied slots (some may hold cancelled-to-zero coefficients).
    std::size_t occupied() const { return used_; }

    // When set, add() throws Overflow instead of growing past `cap`
    // occupied slots.  Used by the streaming norm oracle to bound peak
    // memory and fall back to partitioned passes.
    void set_capacity_limit(std::size_t cap) { cap_ = cap; }

    // When mod != 0, silently drop words whose hash class (hash % mod)
    // differs from `klass`; lets the oracle re-stream the same expansion
    // once per class with a bounded table.
    void set_partition(std::uint64_t mod, std::uint64_t klass) {
        part_mod_ = mod;
        part_class_ = klass;
    }

    struct Overflow {};  // thrown on capacity-limit hit

    // Extract the nonzero terms in canonical order.  Leaves the accumulator empty.
    std::vector<Poly::Term> drain_sorted();
    Poly freeze(const GroupContext& ctx);

    static std::uint64_t hash_word(const Word& w);

private:
    struct Slot {
        Word word;
        Int coeff;
        std::uint64_t hash = 0;
        bool used = false;
    };
    void grow();
    Slot* find_slot(const Word& w, std::uint64_t h);

    std::vector<Slot> slots_;
    std::size_t used_ = 0;
    std::size_t cap_ = 0;  // 0 = unlimited
    std::uint64_t part_mod_ = 0;
    std::uint64_t part_class_ = 0;
};

}  // namespace normone
