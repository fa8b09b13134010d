#include "absorblab/phi.hpp"

#include <sstream>

namespace absorblab {

PhiSpec PhiSpec::power(int n) {
    if (n < 2) throw MalformedSpec("phi_n requires n >= 2");
    PhiSpec p;
    p.kind = Kind::Power;
    p.n = n;
    return p;
}

PhiSpec PhiSpec::product(std::vector<PhiSpec> comps) {
    if (comps.empty()) throw MalformedSpec("product phi needs at least one component");
    PhiSpec p;
    p.kind = Kind::Product;
    p.components = std::move(comps);
    return p;
}

PhiSpec PhiSpec::from_table(std::map<Bitset, PhiValue> entries) {
    PhiSpec p;
    p.kind = Kind::Table;
    p.table = std::move(entries);
    return p;
}

PhiSpec PhiSpec::from_json(const json& j) {
    if (!j.is_object() || !j.contains("phi")) throw MalformedSpec("phi spec must contain \"phi\"");
    std::string k = j.at("phi").get<std::string>();
    if (k == "empty") return empty();
    if (k == "zero") return zero();
    if (k == "omega") return omega_phi();
    if (k == "identity") return identity();
    if (k == "power") return power(j.at("n").get<int>());
    if (k == "product") {
        std::vector<PhiSpec> comps;
        for (const auto& c : j.at("components")) comps.push_back(from_json(c));
        return product(std::move(comps));
    }
    throw MalformedSpec("unrecognized phi spec: " + j.dump());
}

json PhiSpec::to_json() const {
    switch (kind) {
        case Kind::Empty: return json{{"phi", "empty"}};
        case Kind::Zero: return json{{"phi", "zero"}};
        case Kind::Omega: return json{{"phi", "omega"}};
        case Kind::Identity: return json{{"phi", "identity"}};
        case Kind::Power: return json{{"phi", "power"}, {"n", n}};
        case Kind::Product: {
            json comps = json::array();
            for (const auto& c : components) comps.push_back(c.to_json());
            return json{{"phi", "product"}, {"components", comps}};
        }
        case Kind::Table:
            throw MalformedSpec("table phi has no JSON form");
    }
    throw MalformedSpec("corrupt phi spec");
}

std::string PhiSpec::name() const {
    switch (kind) {
        case Kind::Empty: return "phi_empty";
        case Kind::Zero: return "phi_0";
        case Kind::Omega: return "phi_omega";
        case Kind::Identity: return "phi_1";
        case Kind::Power: return "phi_" + std::to_string(n);
        case Kind::Product: {
            std::string out;
            for (std::size_t i = 0; i < components.size(); ++i) {
                if (i) out += "x";
                out += components[i].name();
            }
            return out;
        }
        case Kind::Table: return "phi_table";
    }
    return "?";
}

std::string PhiSpec::key() const {
    switch (kind) {
        case Kind::Empty: return "E";
        case Kind::Zero: return "0";
        case Kind::Omega: return "w";
        case Kind::Identity: return "1";
        case Kind::Power: return "p" + std::to_string(n);
        case Kind::Product: {
            std::string out = "[";
            for (const auto& c : components) out += c.key() + ",";
            return out + "]";
        }
        case Kind::Table: {
            std::ostringstream os;
            os << "t{";
            for (const auto& [k, v] : table) {
                for (int e : k.elements()) os << e << ".";
                os << "->";
                if (v) {
                    for (int e : v->elements()) os << e << ".";
                } else {
                    os << "E";
                }
                os << ";";
            }
            os << "}";
            return os.str();
        }
    }
    return "?";
}

PhiValue phi_eval(const PhiSpec& phi, const FiniteRing& ring, const Ideal& I) {
    if (I.ring_key() != ring.key()) throw RingMismatch("phi_eval: ideal from another ring");
    PhiValue raw;
    switch (phi.kind) {
        case PhiSpec::Kind::Empty:
            return std::nullopt;
        case PhiSpec::Kind::Zero:
            raw = Bitset::singleton(static_cast<std::size_t>(ring.order()), 0);
            break;
        case PhiSpec::Kind::Power:
            raw = power(ring, I, phi.n).members();
            break;
        case PhiSpec::Kind::Omega:
            raw = omega(ring, I).members();
            break;
        case PhiSpec::Kind::Identity:
            raw = I.members();
            break;
        case PhiSpec::Kind::Product: {
            if (ring.spec().kind != RingSpec::Kind::Product)
                throw SpecMismatch("product phi on a non-product ring");
            int arity = ring.product_arity();
            if (arity != static_cast<int>(phi.components.size()))
                throw SpecMismatch("product phi arity does not match the ring");

            // In a finite product ring every ideal splits componentwise, so the
            // projections recompose exactly.
            std::vector<Bitset> projections;
            projections.reserve(static_cast<std::size_t>(arity));
            for (int i = 0; i < arity; ++i)
                projections.emplace_back(static_cast<std::size_t>(ring.factor(i).order()));
            for (int x : I.elements()) {
                std::vector<int> comps = ring.product_decode(x);
                for (int i = 0; i < arity; ++i)
                    projections[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(comps[static_cast<std::size_t>(i)]));
            }

            std::vector<Bitset> values;
            values.reserve(static_cast<std::size_t>(arity));
            for (int i = 0; i < arity; ++i) {
                PhiValue v = phi_eval(phi.components[static_cast<std::size_t>(i)], ring.factor(i),
                                      Ideal(ring.factor(i), projections[static_cast<std::size_t>(i)]));
                if (!v) return std::nullopt;  // any empty component empties the product
                values.push_back(std::move(*v));
            }

            Bitset combined(static_cast<std::size_t>(ring.order()));
            std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
            std::vector<std::vector<int>> elem_lists;
            for (const auto& v : values) elem_lists.push_back(v.elements());
            std::vector<std::size_t> cursor(static_cast<std::size_t>(arity), 0);
            for (;;) {
                for (int i = 0; i < arity; ++i)
                    tuple[static_cast<std::size_t>(i)] = elem_lists[static_cast<std::size_t>(i)][cursor[static_cast<std::size_t>(i)]];
                combined.set(static_cast<std::size_t>(ring.product_encode(tuple)));
                int i = arity - 1;
                while (i >= 0 && ++cursor[static_cast<std::size_t>(i)] == elem_lists[static_cast<std::size_t>(i)].size()) {
                    cursor[static_cast<std::size_t>(i)] = 0;
                    --i;
                }
                if (i < 0) break;
            }
            raw = std::move(combined);
            break;
        }
        case PhiSpec::Kind::Table: {
            auto it = phi.table.find(I.members());
            if (it == phi.table.end()) throw TableMiss("table phi has no entry for this ideal");
            if (!it->second) return std::nullopt;
            raw = it->second;
            break;
        }
    }
    // I - phi(I) = I - (I n phi(I)), so assume phi(I) inside I.
    return *raw & I.members();
}

bool phi_leq(const PhiSpec& lhs, const PhiSpec& rhs, const FiniteRing& ring, int bound) {
    for (const Ideal& I : enumerate_ideals(ring, bound)) {
        PhiValue a = phi_eval(lhs, ring, I);
        if (!a) continue;  // emptyset is below everything
        PhiValue b = phi_eval(rhs, ring, I);
        if (!b) return false;
        if (!a->subset_of(*b)) return false;
    }
    return true;
}

std::vector<PhiSpec> standard_ladder(int n_max) {
    if (n_max < 2) throw MalformedSpec("standard ladder requires n_max >= 2");
    std::vector<PhiSpec> out;
    out.push_back(PhiSpec::empty());
    out.push_back(PhiSpec::zero());
    out.push_back(PhiSpec::omega_phi());
    for (int n = n_max; n >= 2; --n) out.push_back(PhiSpec::power(n));
    out.push_back(PhiSpec::identity());
    return out;
}

Bitset phi_difference(const Ideal& I, const PhiValue& phiI) {
    Bitset out = I.members();
    if (phiI) {
        for (int x : phiI->elements()) out.reset(static_cast<std::size_t>(x));
    }
    return out;
}

}  // namespace absorblab
