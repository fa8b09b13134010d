#include "absorblab/cache.hpp"

#include <filesystem>
#include <fstream>

namespace absorblab {

namespace fs = std::filesystem;

std::string lattice_cache_path(const std::string& dir, const RingSpec& spec) {
    return (fs::path(dir) / (content_hash(spec.key()) + ".lattice.json")).string();
}

void write_lattice_cache(const std::string& dir, const FiniteRing& ring,
                         const std::vector<Ideal>& lattice) {
    fs::create_directories(dir);
    json ideals = json::array();
    for (const Ideal& I : lattice) ideals.push_back(I.elements());
    json doc{{"schema", kLatticeCacheSchema},
             {"ring", json::parse(ring.key())},
             {"ideals", ideals}};
    std::ofstream out(lattice_cache_path(dir, ring.spec()));
    if (!out) throw CacheError("cannot write lattice cache under " + dir);
    out << doc.dump(2) << "\n";
}

std::optional<std::vector<Ideal>> read_lattice_cache(const std::string& dir,
                                                     const FiniteRing& ring) {
    std::string path = lattice_cache_path(dir, ring.spec());
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw CacheError("corrupt lattice cache " + path + ": " + e.what());
    }
    if (!doc.contains("schema") || doc.at("schema").get<int>() != kLatticeCacheSchema)
        throw CacheError("lattice cache schema mismatch: " + path);
    if (doc.at("ring").dump() != ring.key())
        throw CacheError("lattice cache spec mismatch: " + path);

    std::vector<Ideal> out;
    for (const auto& members : doc.at("ideals")) {
        Bitset bits(static_cast<std::size_t>(ring.order()));
        for (int x : members.get<std::vector<int>>()) bits.set(static_cast<std::size_t>(x));
        out.emplace_back(ring, bits);
    }
    return out;
}

std::vector<Ideal> cached_enumerate_ideals(const FiniteRing& ring, const std::string& dir,
                                           int bound) {
    if (!dir.empty()) {
        if (auto cached = read_lattice_cache(dir, ring)) return *cached;
    }
    std::vector<Ideal> lattice = enumerate_ideals(ring, bound);
    if (!dir.empty()) write_lattice_cache(dir, ring, lattice);
    return lattice;
}

json ideal_to_json(const FiniteRing& ring, const Ideal& I) {
    return json{{"ring", content_hash(ring.key())}, {"members", I.elements()}};
}

}  // namespace absorblab
