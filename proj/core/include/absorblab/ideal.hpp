#pragma once

#include <span>
#include <string>
#include <vector>

#include "absorblab/bitset.hpp"
#include "absorblab/ring.hpp"

namespace absorblab {

// A subset of a ring's carrier closed under the ideal axioms. Value object
// keyed by (ring identity, member bit-set).
class Ideal {
public:
    Ideal() = default;
    Ideal(const FiniteRing& ring, Bitset members)
        : ring_key_(ring.key()), members_(std::move(members)) {}

    const std::string& ring_key() const { return ring_key_; }
    const Bitset& members() const { return members_; }
    bool contains(int x) const { return members_.test(static_cast<std::size_t>(x)); }
    std::size_t size() const { return members_.count(); }
    std::vector<int> elements() const { return members_.elements(); }

    bool proper(const FiniteRing& ring) const { return !contains(ring.one()); }
    bool is_zero() const { return members_.count() == 1; }

    bool operator==(const Ideal& o) const {
        return ring_key_ == o.ring_key_ && members_ == o.members_;
    }
    bool operator<(const Ideal& o) const {
        if (ring_key_ != o.ring_key_) return ring_key_ < o.ring_key_;
        if (members_.count() != o.members_.count()) return members_.count() < o.members_.count();
        return members_ < o.members_;
    }

private:
    std::string ring_key_;
    Bitset members_;
};

enum class IdealOp { Sum, Product, Intersect };

// Smallest ideal containing the generators (worklist closure).
Ideal span(const FiniteRing& ring, std::span<const int> generators);
Ideal span(const FiniteRing& ring, const Bitset& generators);

// The zero ideal and the whole ring.
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

// Complete list of ideals, sorted by (size, bit-set order); includes {0} and R.
// Throws OrderTooLarge above the bound.
std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, int bound = 64);

// {r | r^k in I for some k}; power sequences are walked with cycle detection.
Ideal radical(const FiniteRing& ring, const Ideal& I);

Ideal ideal_op(const FiniteRing& ring, IdealOp kind, const Ideal& I, const Ideal& J);
Ideal power(const FiniteRing& ring, const Ideal& I, int n);

// Stable point of the chain I >= I^2 >= ...; `stabilized_at` (when non-null)
// receives the least n with I^n = I^(n+1).
Ideal omega(const FiniteRing& ring, const Ideal& I, int* stabilized_at = nullptr);

// (I : x) = {r | rx in I}.
Ideal colon(const FiniteRing& ring, const Ideal& I, int x);

// Z_I(R) = {r | rs in I for some s outside I}; not an ideal in general.
Bitset z_set(const FiniteRing& ring, const Ideal& I);

// {x | 1 - rx is a unit for every r}; equals the intersection of maximal
// ideals, which the test suite cross-checks.
Ideal jacobson_radical(const FiniteRing& ring);

// True when the member set satisfies all ideal axioms (used by tests and the
// subset-filter oracle).
bool is_ideal_set(const FiniteRing& ring, const Bitset& members);

// Submodule analogues for FiniteModule (Nakayama and idealization checks).
Bitset submodule_span(const FiniteModule& module, std::span<const int> generators);
std::vector<Bitset> enumerate_submodules(const FiniteModule& module, int bound = 64);
bool is_submodule_set(const FiniteModule& module, const Bitset& members);

}  // namespace absorblab
