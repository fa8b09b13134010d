#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "absorblab/classifier.hpp"
#include "absorblab/corpus.hpp"

namespace absorblab {

struct VerifyOptions {
    int n_max = 4;       // standard ladder depth
    int jobs = 1;        // worker threads over corpus rings
    int order_cap = 64;  // lattice enumeration bound for corpus and derived rings
};

struct TheoremViolation {
    std::string ring;  // canonical ring spec
    json instance;     // ideal(s), phi, witness, sub-part
};

struct VerificationReport {
    std::string theorem_id;
    std::int64_t instances_checked = 0;
    std::int64_t vacuous_instances = 0;
    std::vector<TheoremViolation> violations;
    std::map<std::string, std::int64_t> details;  // theorem-specific counters
    std::vector<json> flagged;                    // hypothesis-true instances, where tracked
    std::set<std::string> notes;                  // conventions and vacuity flags
    double wall_time_sec = 0.0;                   // measured; not serialized

    std::int64_t non_vacuous() const { return instances_checked - vacuous_instances; }
    bool verified() const { return violations.empty(); }

    // Canonical, byte-stable serialization (timing excluded).
    json to_json() const;
};

// The theorem identifiers in report order.
const std::vector<std::string>& all_theorem_ids();
bool known_theorem(const std::string& id);

VerificationReport verify(const std::string& theorem_id, const std::vector<FiniteRing>& corpus,
                          const VerifyOptions& opts = {});

// Runs several theorems in one pass over the corpus so per-ring caches are
// shared; reports come back in the order the ids were given.
std::vector<VerificationReport> verify_many(const std::vector<std::string>& ids,
                                            const std::vector<FiniteRing>& corpus,
                                            const VerifyOptions& opts = {});

}  // namespace absorblab
