#include "normone/poly.hpp"

#include <algorithm>
#include <bit>

namespace normone {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Poly Poly::zero(const GroupContext& ctx) { return Poly(ctx, {}); }

Poly Poly::unit(const GroupContext& ctx) { return constant(ctx, 1); }

Poly Poly::constant(const GroupContext& ctx, Int c) {
    if (c == 0) return zero(ctx);
    std::vector<Term> t;
    t.push_back({Word{}, std::move(c)});
    return Poly(ctx, std::move(t));
}

Poly Poly::generator(const GroupContext& ctx, std::uint32_t j) {
    if (j >= ctx.order())
        throw ParameterError("generator index " + std::to_string(j) + " outside group of order " +
                             std::to_string(ctx.order()));
    std::vector<Term> t;
    t.push_back({Word(1, static_cast<Letter>(j)), 1});
    return Poly(ctx, std::move(t));
}

Poly Poly::from_terms(const GroupContext& ctx, std::vector<Term> terms) {
    TermAccumulator acc(terms.size());
    for (auto& t : terms) {
        for (Letter l : t.word)
            if (static_cast<std::uint32_t>(l) >= ctx.order())
                throw ParameterError("monomial letter " + std::to_string(l) +
                                     " outside group of order " + std::to_string(ctx.order()));
        acc.add(std::move(t.word), t.coeff);
    }
    return acc.freeze(ctx);
}

bool Poly::is_unit() const {
    const auto& ts = *terms_;
    return ts.size() == 1 && ts[0].word.empty() && ts[0].coeff == 1;
}

std::size_t Poly::degree() const {
    // Canonical order sorts by degree first, so the last term is maximal.
    return terms_->empty() ? 0 : terms_->back().word.size();
}

Int Poly::coeff(const Word& w) const {
    const auto& ts = *terms_;
    auto it = std::lower_bound(ts.begin(), ts.end(), w,
                               [](const Term& t, const Word& key) { return word_less(t.word, key); });
    if (it != ts.end() && it->word == w) return it->coeff;
    return 0;
}

bool Poly::operator==(const Poly& o) const {
    if (ctx_ != o.ctx_) return false;
    if (terms_ == o.terms_) return true;  // shared storage
    const auto& a = *terms_;
    const auto& b = *o.terms_;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].word != b[i].word || a[i].coeff != b[i].coeff) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_context(ctx_, o.ctx_, "poly add");
    // Merge two sorted runs directly; no hashing needed.
    const auto& a = *terms_;
    const auto& b = *o.terms_;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].word == b[j].word) {
            Int c = a[i].coeff + b[j].coeff;
            if (c != 0) out.push_back({a[i].word, std::move(c)});
            ++i, ++j;
        } else if (word_less(a[i].word, b[j].word)) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return Poly(ctx_, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<Term> out = *terms_;
    for (auto& t : out) t.coeff = -t.coeff;
    return Poly(ctx_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scale(const Int& c) const {
    if (c == 0) return zero(ctx_);
    std::vector<Term> out = *terms_;
    for (auto& t : out) t.coeff *= c;
    return Poly(ctx_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_context(ctx_, o.ctx_, "poly mul");
    TermAccumulator acc(term_count() * o.term_count() / 2 + 4);
    Word buf;
    for (const Term& a : *terms_) {
        for (const Term& b : *o.terms_) {
            buf.assign(a.word);
            buf.append(b.word);
            acc.add(buf, a.coeff * b.coeff);
        }
    }
    return acc.freeze(ctx_);
}

// --- TermAccumulator ---------------------------------------------------------

namespace {

std::size_t table_capacity_for(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    return cap;
}

std::uint64_t mix64(std::uint64_t v) {
    // splitmix64 finalizer: cheap avalanche on top of the FNV pass.
    v ^= v >> 30;
    v *= 0xBF58476D1CE4E5B9ull;
    v ^= v >> 27;
    v *= 0x94D049BB133111EBull;
    v ^= v >> 31;
    return v;
}

}  // namespace

std::uint64_t TermAccumulator::hash_word(const Word& w) {
    std::uint64_t h = 1469598103934665603ull;
    for (Letter l : w) {
        h ^= static_cast<std::uint64_t>(l);
        h *= 1099511628211ull;
    }
    return mix64(h);
}

TermAccumulator::TermAccumulator(std::size_t expected) {
    slots_.resize(table_capacity_for(expected));
}

TermAccumulator::Slot* TermAccumulator::find_slot(const Word& w, std::uint64_t h) {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(h) & mask;
    while (true) {
        Slot& s = slots_[i];
        if (!s.used || (s.hash == h && s.word == w)) return &s;
        i = (i + 1) & mask;
    }
}

void TermAccumulator::grow() {
    std::vector<Slot> old;
    old.swap(slots_);
    slots_.resize(old.size() * 2);
    for (Slot& s : old) {
        if (!s.used) continue;
        std::size_t mask = slots_.size() - 1;
        std::size_t i = static_cast<std::size_t>(s.hash) & mask;
        while (slots_[i].used) i = (i + 1) & mask;
        slots_[i] = std::move(s);
    }
}

void TermAccumulator::add(const Word& w, const Int& c) {
    if (c == 0) return;
    std::uint64_t h = hash_word(w);
    if (part_mod_ && h % part_mod_ != part_class_) return;
    Slot* s = find_slot(w, h);
    if (s->used) {
        s->coeff += c;
        return;
    }
    if (cap_ && used_ >= cap_) throw Overflow{};
    s->used = true;
    s->hash = h;
    s->word = w;
    s->coeff = c;
    if (++used_ * 4 >= slots_.size() * 3) grow();
}

void TermAccumulator::add(Word&& w, const Int& c) {
    if (c == 0) return;
    std::uint64_t h = hash_word(w);
    if (part_mod_ && h % part_mod_ != part_class_) return;
    Slot* s = find_slot(w, h);
    if (s->used) {
        s->coeff += c;
        return;
    }
    if (cap_ && used_ >= cap_) throw Overflow{};
    s->used = true;
    s->hash = h;
    s->word = std::move(w);
    s->coeff = c;
    if (++used_ * 4 >= slots_.size() * 3) grow();
}

std::vector<Poly::Term> TermAccumulator::drain_sorted() {
    std::vector<Poly::Term> out;
    out.reserve(used_);
    for (Slot& s : slots_) {
        if (s.used && s.coeff != 0) out.push_back({std::move(s.word), std::move(s.coeff)});
        s.used = false;
    }
    used_ = 0;
    std::sort(out.begin(), out.end(),
              [](const Poly::Term& a, const Poly::Term& b) { return word_less(a.word, b.word); });
    return out;
}

Poly TermAccumulator::freeze(const GroupContext& ctx) { return Poly(ctx, drain_sorted()); }

}  // namespace normone
