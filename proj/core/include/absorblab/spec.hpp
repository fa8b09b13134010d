#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "absorblab/errors.hpp"

namespace absorblab {

using json = nlohmann::json;

struct RingSpec;

// Description of a finite module over the ring described by the enclosing
// RingSpec. Only the variants needed for idealization and Nakayama checks.
struct ModuleSpec {
    enum class Kind { Regular, Quotient, DirectSum };

    Kind kind = Kind::Regular;
    std::vector<int> gens;            // Quotient: generators of the submodule N
    std::vector<ModuleSpec> summands; // DirectSum

    static ModuleSpec regular() { return ModuleSpec{}; }
    static ModuleSpec quotient(std::vector<int> generators);
    static ModuleSpec direct_sum(std::vector<ModuleSpec> parts);

    static ModuleSpec from_json(const json& j);
    json to_json() const;
    std::string key() const { return to_json().dump(); }

    bool operator==(const ModuleSpec& o) const { return key() == o.key(); }
};

// Structural description of a finite commutative ring with identity.
// The JSON form is the canonical cache key after key-sorted serialization.
struct RingSpec {
    enum class Kind { Zn, Product, Quotient, Localization, Idealization };

    Kind kind = Kind::Zn;
    int n = 0;                         // Zn
    std::vector<RingSpec> factors;     // Product
    std::shared_ptr<RingSpec> base;    // Quotient / Localization / Idealization
    std::vector<int> gens;             // Quotient: ideal generators; Localization: s-generators
    std::shared_ptr<ModuleSpec> module; // Idealization

    static RingSpec zn(int n);
    static RingSpec product(std::vector<RingSpec> factors);
    static RingSpec quotient(RingSpec base, std::vector<int> gens);
    static RingSpec localization(RingSpec base, std::vector<int> s_gens);
    static RingSpec idealization(RingSpec base, ModuleSpec module);

    static RingSpec from_json(const json& j);
    json to_json() const;

    // Canonical serialization; nlohmann orders object keys, so dump() is a
    // stable content key.
    std::string key() const { return to_json().dump(); }

    bool operator==(const RingSpec& o) const { return key() == o.key(); }
};

// FNV-1a hash of the canonical serialization, as a fixed-width hex string.
std::string content_hash(const std::string& canonical);

}  // namespace absorblab
