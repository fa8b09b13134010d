#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absorblab/phi.hpp"

namespace absorblab {

enum class Property {
    Prime,
    QuasiPrimary,
    TwoAbsorbing,
    TwoAbsorbingPrimary,
    TwoAbsorbingQuasiPrimary,
};

inline constexpr std::array<Property, 5> kAllProperties = {
    Property::Prime, Property::QuasiPrimary, Property::TwoAbsorbing,
    Property::TwoAbsorbingPrimary, Property::TwoAbsorbingQuasiPrimary};

std::string property_name(Property p);

struct PredicateOutcome {
    bool holds = true;
    std::vector<int> witness;  // first violating tuple in lex element order

    explicit operator bool() const { return holds; }
};

// Value-level predicate cores. `phiI` is phi already evaluated at I, so the
// same routines serve the phi_alpha family, table phis and the localization
// phi_q. Membership sets are bitsets over the ring carrier.
namespace pred {

PredicateOutcome prime(const FiniteRing& R, const Bitset& I, const PhiValue& phiI);
PredicateOutcome quasi_primary(const FiniteRing& R, const Bitset& I, const PhiValue& phiI,
                               const Bitset& radI);
PredicateOutcome two_absorbing(const FiniteRing& R, const Bitset& I, const PhiValue& phiI);
PredicateOutcome two_absorbing_primary(const FiniteRing& R, const Bitset& I, const PhiValue& phiI,
                                       const Bitset& radI);
PredicateOutcome two_absorbing_quasi_primary(const FiniteRing& R, const Bitset& I,
                                             const PhiValue& phiI, const Bitset& radI);

PredicateOutcome dispatch(Property p, const FiniteRing& R, const Bitset& I, const PhiValue& phiI,
                          const Bitset& radI);

}  // namespace pred

// Spec-level operations; all of them require a proper ideal.
PredicateOutcome is_phi_prime(const FiniteRing& ring, const Ideal& I, const PhiSpec& phi);
PredicateOutcome is_phi_quasi_primary(const FiniteRing& ring, const Ideal& I, const PhiSpec& phi);
PredicateOutcome is_phi_two_absorbing(const FiniteRing& ring, const Ideal& I, const PhiSpec& phi);
PredicateOutcome is_phi_two_absorbing_primary(const FiniteRing& ring, const Ideal& I,
                                              const PhiSpec& phi);

enum class TwoAqpRoute { Elementwise, Radical };

// Elementwise: abc in I - phi(I) forces a pair product into rad(I).
// Radical route (phi_empty only): rad(I) is a 2-absorbing ideal.
PredicateOutcome is_phi_2aqp(const FiniteRing& ring, const Ideal& I, const PhiSpec& phi,
                             TwoAqpRoute route = TwoAqpRoute::Elementwise);

// All triples with abc in phi(I) and every pair product outside rad(I),
// deduplicated as a <= b <= c.
std::vector<std::array<int, 3>> strongly_triple_zeros(const FiniteRing& ring, const Ideal& I,
                                                      const PhiSpec& phi);
std::vector<std::array<int, 3>> strongly_triple_zeros(const FiniteRing& ring, const Ideal& I,
                                                      const PhiValue& phiI);

struct ClassificationReport {
    std::string ring_spec;  // canonical JSON
    std::string ring_hash;
    std::vector<int> ideal_members;
    std::vector<PhiSpec> ladder;
    // matrix[property][ladder index]
    std::map<Property, std::vector<bool>> matrix;

    struct CellWitness {
        Property prop;
        int phi_index;
        std::vector<int> tuple;
    };
    std::vector<CellWitness> witnesses;

    struct PhiTripleZeros {
        int phi_index;
        std::vector<std::array<int, 3>> triples;
    };
    std::vector<PhiTripleZeros> triple_zeros;

    json to_json() const;
};

// Full boolean matrix over the standard ladder; enforces ladder monotonicity
// and the quasi-primary => 2-absorbing-primary => 2AQP chain, throwing
// AxiomViolation on any breach (that would be a classifier bug).
ClassificationReport classify(const FiniteRing& ring, const Ideal& I, int n_max);

}  // namespace absorblab
