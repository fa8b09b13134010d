#pragma once

#include <vector>

#include "absorblab/ring.hpp"

namespace absorblab {

// Deterministic generator for the small-ring corpus the theorem harness
// sweeps. The defaults reproduce the desk-scale corpus: Zn up to 24, 2- and
// 3-factor products of Zn (n <= 8) up to total order 64, quotients of Z12 and
// Z16, and idealizations up to order 32.
struct CorpusSpec {
    int zn_max = 24;
    int product_min_factors = 2;
    int product_max_factors = 3;
    int product_zn_max = 8;      // per-factor bound; factors are non-decreasing
    int product_order_cap = 64;
    bool include_quotients = true;
    std::vector<int> quotient_bases = {12, 16};
    bool include_idealizations = true;
    int idealization_order_cap = 32;

    static CorpusSpec defaults() { return {}; }
    static CorpusSpec from_json(const json& j);
    json to_json() const;
};

// Duplicate-free (by spec key) list in generation order. Every generated ring
// order must stay within `global_order_bound`, else CapExceeded.
std::vector<FiniteRing> build_corpus(const CorpusSpec& spec, int global_order_bound = 64);

}  // namespace absorblab
