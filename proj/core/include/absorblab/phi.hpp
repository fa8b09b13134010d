#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absorblab/ideal.hpp"

namespace absorblab {

// nullopt stands for the empty set, which is distinct from the zero ideal:
// I - emptyset = I while I - {0} drops 0.
using PhiValue = std::optional<Bitset>;

// Symbolic descriptor of a function phi: L(R) -> L(R) u {emptyset}.
struct PhiSpec {
    enum class Kind { Empty, Zero, Power, Omega, Identity, Product, Table };

    Kind kind = Kind::Empty;
    int n = 0;                                  // Power
    std::vector<PhiSpec> components;            // Product
    std::map<Bitset, PhiValue> table;           // Table

    static PhiSpec empty() { return {}; }
    static PhiSpec zero() { return {Kind::Zero, 0, {}, {}}; }
    static PhiSpec power(int n);
    static PhiSpec omega_phi() { return {Kind::Omega, 0, {}, {}}; }
    static PhiSpec identity() { return {Kind::Identity, 0, {}, {}}; }
    static PhiSpec product(std::vector<PhiSpec> comps);
    static PhiSpec from_table(std::map<Bitset, PhiValue> entries);

    static PhiSpec from_json(const json& j);
    json to_json() const;

    // Display name in the usual subscript notation: phi_empty, phi_0,
    // phi_omega, phi_n, phi_1.
    std::string name() const;
    std::string key() const;

    bool operator==(const PhiSpec& o) const { return key() == o.key(); }
};

// Evaluate phi at I. Nonempty results are normalized by intersecting with I,
// so phi(I) is always emptyset or an ideal contained in I.
PhiValue phi_eval(const PhiSpec& phi, const FiniteRing& ring, const Ideal& I);

// psi1 <= psi2 pointwise over the whole ideal lattice of `ring`.
bool phi_leq(const PhiSpec& lhs, const PhiSpec& rhs, const FiniteRing& ring, int bound = 64);

// [phi_empty, phi_0, phi_omega, phi_{n_max}, ..., phi_2, phi_1].
std::vector<PhiSpec> standard_ladder(int n_max);

// I - phi(I) as a bitset (the unexcused region of I).
Bitset phi_difference(const Ideal& I, const PhiValue& phiI);

}  // namespace absorblab
