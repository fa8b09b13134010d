#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "absorblab/classifier.hpp"

namespace absorblab {

// One conjunct of a counterexample query: an optionally negated classifier
// predicate with its phi modifier ("weakly-", "almost-", "<n>-almost-",
// "omega-", or none for phi_empty).
struct SearchTerm {
    bool negated = false;
    Property prop = Property::Prime;
    PhiSpec phi;
};

struct SearchExpr {
    std::vector<SearchTerm> terms;

    // Grammar: term ("and" term)*, term := ["not"] atom. Case-insensitive.
    static SearchExpr parse(const std::string& text);
};

enum class SearchStatus { Found, NotFound, BudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::string ring;         // canonical spec of the witness ring
    std::vector<int> ideal;   // witness ideal members
    std::int64_t instances_tried = 0;

    json to_json() const;
};

// First witness in deterministic corpus order (rings in corpus order, proper
// ideals in lattice order). `budget` caps the number of (ring, ideal)
// instances examined; exhaustion is reported distinctly from "none found".
SearchResult search_counterexample(const SearchExpr& expr,
                                   const std::vector<FiniteRing>& corpus, std::int64_t budget,
                                   int order_cap = 64);
SearchResult search_counterexample(const std::string& expr,
                                   const std::vector<FiniteRing>& corpus, std::int64_t budget,
                                   int order_cap = 64);

}  // namespace absorblab
