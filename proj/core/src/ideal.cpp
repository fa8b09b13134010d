#include "absorblab/ideal.hpp"

#include <algorithm>
#include <set>

namespace absorblab {

namespace {

void require_same_ring(const FiniteRing& ring, const Ideal& I) {
    if (I.ring_key() != ring.key())
        throw RingMismatch("ideal belongs to a different ring");
}

Bitset closure(const FiniteRing& R, Bitset seed) {
    int n = R.order();
    seed.set(0);
    std::vector<int> work = seed.elements();
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int r = 0; r < n; ++r) {
            int y = R.mul(r, x);
            if (!seed.test(static_cast<std::size_t>(y))) {
                seed.set(static_cast<std::size_t>(y));
                work.push_back(y);
            }
        }
        for (int y : seed.elements()) {
            int s = R.add(x, y);
            if (!seed.test(static_cast<std::size_t>(s))) {
                seed.set(static_cast<std::size_t>(s));
                work.push_back(s);
            }
        }
    }
    return seed;
}

}  // namespace

Ideal span(const FiniteRing& ring, std::span<const int> generators) {
    Bitset seed(static_cast<std::size_t>(ring.order()));
    for (int g : generators) {
        if (g < 0 || g >= ring.order()) throw RingMismatch("generator index out of range");
        seed.set(static_cast<std::size_t>(g));
    }
    return Ideal(ring, closure(ring, std::move(seed)));
}

Ideal span(const FiniteRing& ring, const Bitset& generators) {
    return Ideal(ring, closure(ring, generators));
}

Ideal zero_ideal(const FiniteRing& ring) {
    return Ideal(ring, Bitset::singleton(static_cast<std::size_t>(ring.order()), 0));
}

Ideal unit_ideal(const FiniteRing& ring) {
    Bitset all(static_cast<std::size_t>(ring.order()));
    for (int i = 0; i < ring.order(); ++i) all.set(static_cast<std::size_t>(i));
    return Ideal(ring, all);
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, int bound) {
    if (ring.order() > bound) throw OrderTooLarge("ideal enumeration bound exceeded");
    int n = ring.order();

    // Every ideal of a finite ring is a finite sum of principal ideals, so
    // closing the principal ideals under pairwise sum reaches all of them.
    std::set<Bitset> found;
    std::vector<Bitset> work;
    for (int x = 0; x < n; ++x) {
        Bitset p = span(ring, std::span<const int>(&x, 1)).members();
        if (found.insert(p).second) work.push_back(p);
    }
    while (!work.empty()) {
        Bitset cur = work.back();
        work.pop_back();
        std::vector<Bitset> snapshot(found.begin(), found.end());
        for (const Bitset& other : snapshot) {
            Bitset u = cur | other;
            if (found.count(u)) continue;
            Bitset sum = closure(ring, u);
            if (found.insert(sum).second) work.push_back(sum);
        }
    }

    std::vector<Ideal> out;
    out.reserve(found.size());
    for (const Bitset& b : found) out.emplace_back(ring, b);
    std::sort(out.begin(), out.end());
    return out;
}

Ideal radical(const FiniteRing& ring, const Ideal& I) {
    require_same_ring(ring, I);
    int n = ring.order();
    Bitset out(static_cast<std::size_t>(n));
    Bitset seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        // Walk r, r^2, r^3, ... until the power sequence revisits a value.
        seen = Bitset(static_cast<std::size_t>(n));
        int p = r;
        bool in = false;
        while (!seen.test(static_cast<std::size_t>(p))) {
            if (I.contains(p)) {
                in = true;
                break;
            }
            seen.set(static_cast<std::size_t>(p));
            p = ring.mul(p, r);
        }
        if (in) out.set(static_cast<std::size_t>(r));
    }
    return Ideal(ring, out);
}

Ideal ideal_op(const FiniteRing& ring, IdealOp kind, const Ideal& I, const Ideal& J) {
    require_same_ring(ring, I);
    require_same_ring(ring, J);
    switch (kind) {
        case IdealOp::Sum:
            return span(ring, I.members() | J.members());
        case IdealOp::Intersect:
            return Ideal(ring, I.members() & J.members());
        case IdealOp::Product: {
            Bitset seed(static_cast<std::size_t>(ring.order()));
            for (int x : I.elements())
                for (int y : J.elements()) seed.set(static_cast<std::size_t>(ring.mul(x, y)));
            return span(ring, seed);
        }
    }
    throw Error("unreachable ideal_op kind");
}

Ideal power(const FiniteRing& ring, const Ideal& I, int n) {
    require_same_ring(ring, I);
    if (n < 1) throw Error("ideal power requires n >= 1");
    Ideal acc = I;
    for (int k = 1; k < n; ++k) acc = ideal_op(ring, IdealOp::Product, acc, I);
    return acc;
}

Ideal omega(const FiniteRing& ring, const Ideal& I, int* stabilized_at) {
    require_same_ring(ring, I);
    Ideal prev = I;
    int n = 1;
    for (;;) {
        Ideal next = ideal_op(ring, IdealOp::Product, prev, I);
        if (next.members() == prev.members()) {
            if (stabilized_at) *stabilized_at = n;
            return prev;
        }
        prev = std::move(next);
        ++n;
    }
}

Ideal colon(const FiniteRing& ring, const Ideal& I, int x) {
    require_same_ring(ring, I);
    Bitset out(static_cast<std::size_t>(ring.order()));
    for (int r = 0; r < ring.order(); ++r)
        if (I.contains(ring.mul(r, x))) out.set(static_cast<std::size_t>(r));
    return Ideal(ring, out);
}

Bitset z_set(const FiniteRing& ring, const Ideal& I) {
    require_same_ring(ring, I);
    if (!I.proper(ring)) throw ImproperIdeal("Z_I(R) requires a proper ideal");
    int n = ring.order();
    Bitset out(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            if (I.contains(s)) continue;
            if (I.contains(ring.mul(r, s))) {
                out.set(static_cast<std::size_t>(r));
                break;
            }
        }
    }
    return out;
}

Ideal jacobson_radical(const FiniteRing& ring) {
    int n = ring.order();
    Bitset out(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        bool ok = true;
        for (int r = 0; r < n && ok; ++r) {
            int u = ring.sub(ring.one(), ring.mul(r, x));
            if (!ring.is_unit(u)) ok = false;
        }
        if (ok) out.set(static_cast<std::size_t>(x));
    }
    return Ideal(ring, out);
}

bool is_ideal_set(const FiniteRing& ring, const Bitset& members) {
    if (!members.test(0)) return false;
    int n = ring.order();
    std::vector<int> elems = members.elements();
    for (int x : elems) {
        for (int y : elems)
            if (!members.test(static_cast<std::size_t>(ring.add(x, y)))) return false;
        for (int r = 0; r < n; ++r)
            if (!members.test(static_cast<std::size_t>(ring.mul(r, x)))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Submodules
// ---------------------------------------------------------------------------

namespace {

Bitset submodule_closure(const FiniteModule& M, Bitset seed) {
    int rn = M.ring().order();
    seed.set(0);
    std::vector<int> work = seed.elements();
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int r = 0; r < rn; ++r) {
            int y = M.scalar(r, x);
            if (!seed.test(static_cast<std::size_t>(y))) {
                seed.set(static_cast<std::size_t>(y));
                work.push_back(y);
            }
        }
        for (int y : seed.elements()) {
            int s = M.add(x, y);
            if (!seed.test(static_cast<std::size_t>(s))) {
                seed.set(static_cast<std::size_t>(s));
                work.push_back(s);
            }
        }
    }
    return seed;
}

}  // namespace

Bitset submodule_span(const FiniteModule& module, std::span<const int> generators) {
    Bitset seed(static_cast<std::size_t>(module.order()));
    for (int g : generators) seed.set(static_cast<std::size_t>(g));
    return submodule_closure(module, std::move(seed));
}

std::vector<Bitset> enumerate_submodules(const FiniteModule& module, int bound) {
    if (module.order() > bound) throw OrderTooLarge("submodule enumeration bound exceeded");
    int n = module.order();
    std::set<Bitset> found;
    std::vector<Bitset> work;
    for (int x = 0; x < n; ++x) {
        Bitset p = submodule_span(module, std::span<const int>(&x, 1));
        if (found.insert(p).second) work.push_back(p);
    }
    while (!work.empty()) {
        Bitset cur = work.back();
        work.pop_back();
        std::vector<Bitset> snapshot(found.begin(), found.end());
        for (const Bitset& other : snapshot) {
            Bitset u = cur | other;
            if (found.count(u)) continue;
            Bitset sum = submodule_closure(module, u);
            if (found.insert(sum).second) work.push_back(sum);
        }
    }
    std::vector<Bitset> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    return out;
}

bool is_submodule_set(const FiniteModule& module, const Bitset& members) {
    if (!members.test(0)) return false;
    int rn = module.ring().order();
    std::vector<int> elems = members.elements();
    for (int x : elems) {
        for (int y : elems)
            if (!members.test(static_cast<std::size_t>(module.add(x, y)))) return false;
        for (int r = 0; r < rn; ++r)
            if (!members.test(static_cast<std::size_t>(module.scalar(r, x)))) return false;
    }
    return true;
}

}  // namespace absorblab
