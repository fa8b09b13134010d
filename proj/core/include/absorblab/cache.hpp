#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absorblab/ideal.hpp"

namespace absorblab {

inline constexpr int kLatticeCacheSchema = 1;

// Content-addressed path: <dir>/<hash(spec)>.lattice.json
std::string lattice_cache_path(const std::string& dir, const RingSpec& spec);

// {"schema":1, "ring":<spec>, "ideals":[[members...]...]}
void write_lattice_cache(const std::string& dir, const FiniteRing& ring,
                         const std::vector<Ideal>& lattice);

// Returns nothing on miss; throws CacheError when a file exists but has the
// wrong schema or does not round-trip to the requested ring.
std::optional<std::vector<Ideal>> read_lattice_cache(const std::string& dir,
                                                     const FiniteRing& ring);

// enumerate_ideals with a write-through cache when `dir` is nonempty.
std::vector<Ideal> cached_enumerate_ideals(const FiniteRing& ring, const std::string& dir,
                                           int bound = 64);

// {"ring": <canonical spec hash>, "members": [ascending indices]}
json ideal_to_json(const FiniteRing& ring, const Ideal& I);

}  // namespace absorblab
