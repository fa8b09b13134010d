#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absorblab/bitset.hpp"
#include "absorblab/errors.hpp"
#include "absorblab/spec.hpp"

namespace absorblab {

class FiniteRing;

struct BuildOptions {
    int max_order = 256;        // hard cap on constructible carrier size
    int self_check_bound = 64;  // axiom triples verified exhaustively up to here
};

// A finite module over a FiniteRing. Immutable after construction; carries
// full operation tables like the ring does.
class FiniteModule {
public:
    int order() const;
    int zero() const { return 0; }
    int add(int a, int b) const;
    int neg(int a) const;
    int scalar(int r, int m) const;
    const std::string& label(int m) const;
    const ModuleSpec& spec() const;
    const FiniteRing& ring() const;
    const std::string& key() const;

    struct Impl;

private:
    friend FiniteModule build_module(const FiniteRing&, const ModuleSpec&, const BuildOptions&);
    friend class FiniteRing;
    std::shared_ptr<const Impl> impl_;
};

// A finite commutative ring with identity. Elements are indices 0..order-1
// with index 0 always the zero element. Value-semantic handle over an
// immutable implementation; cheap to copy and safe to share across threads.
class FiniteRing {
public:
    FiniteRing() = default;

    int order() const;
    int zero() const { return 0; }
    int one() const;
    int add(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    const std::string& label(int a) const;
    const RingSpec& spec() const;
    const std::string& key() const;  // canonical spec serialization
    bool valid() const { return impl_ != nullptr; }

    bool is_unit(int a) const;
    int additive_order(int a) const;

    // Product structure (throws SpecMismatch unless built from a Product spec).
    int product_arity() const;
    const FiniteRing& factor(int i) const;
    int product_encode(std::span<const int> components) const;
    std::vector<int> product_decode(int idx) const;

    // Idealization structure (throws SpecMismatch otherwise).
    const FiniteRing& idealization_base() const;
    const FiniteModule& idealization_module() const;
    int idealization_encode(int r, int m) const;
    std::pair<int, int> idealization_decode(int idx) const;

    // Quotient structure: map from base element to coset index.
    const std::vector<int>& quotient_projection() const;

    // Localization structure: canonical map r -> r/1.
    const std::vector<int>& localization_hom() const;

    struct Impl;

private:
    friend FiniteRing build_ring(const RingSpec&, const BuildOptions&);
    friend FiniteModule build_module(const FiniteRing&, const ModuleSpec&, const BuildOptions&);
    friend FiniteRing idealize(const FiniteRing&, const FiniteModule&, const BuildOptions&);
    std::shared_ptr<const Impl> impl_;
};

FiniteRing build_ring(const RingSpec& spec, const BuildOptions& opts = {});
FiniteModule build_module(const FiniteRing& ring, const ModuleSpec& spec,
                          const BuildOptions& opts = {});

// S^-1 R together with the canonical map r -> r/1. The multiplicative
// closure of s_generators together with 1 must avoid 0 (else ZeroInS).
std::pair<FiniteRing, std::vector<int>> localize(const FiniteRing& ring,
                                                 const std::vector<int>& s_generators,
                                                 const BuildOptions& opts = {});

FiniteRing idealize(const FiniteRing& ring, const FiniteModule& module,
                    const BuildOptions& opts = {});

// Exhaustive a = a^2 x search.
bool is_von_neumann_regular(const FiniteRing& ring);

// Brute-force bijection search preserving 0, 1, + and *. Prunes by additive
// element orders; throws OrderTooLarge above the bound when orders agree.
bool ring_isomorphic(const FiniteRing& a, const FiniteRing& b, int bound = 32);

// Exhaustive verification of the ring/module axioms; throws AxiomViolation
// with a description of the first failing law.
void check_ring_axioms(const FiniteRing& ring);
void check_module_axioms(const FiniteModule& module);

// Multiplicative closure of gens together with 1, as a sorted index set.
std::vector<int> multiplicative_closure(const FiniteRing& ring, const std::vector<int>& gens);

}  // namespace absorblab
