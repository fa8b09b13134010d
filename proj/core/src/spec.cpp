#include "absorblab/spec.hpp"

#include <sstream>

namespace absorblab {

ModuleSpec ModuleSpec::quotient(std::vector<int> generators) {
    ModuleSpec m;
    m.kind = Kind::Quotient;
    m.gens = std::move(generators);
    return m;
}

ModuleSpec ModuleSpec::direct_sum(std::vector<ModuleSpec> parts) {
    if (parts.empty()) throw MalformedSpec("module direct sum needs at least one summand");
    ModuleSpec m;
    m.kind = Kind::DirectSum;
    m.summands = std::move(parts);
    return m;
}

ModuleSpec ModuleSpec::from_json(const json& j) {
    if (!j.is_object()) throw MalformedSpec("module spec must be a JSON object");
    if (j.contains("regular")) {
        if (!j.at("regular").get<bool>()) throw MalformedSpec("\"regular\" must be true");
        return regular();
    }
    if (j.contains("quotient")) {
        const auto& q = j.at("quotient");
        return quotient(q.at("gens").get<std::vector<int>>());
    }
    if (j.contains("sum")) {
        std::vector<ModuleSpec> parts;
        for (const auto& p : j.at("sum")) parts.push_back(from_json(p));
        return direct_sum(std::move(parts));
    }
    throw MalformedSpec("unrecognized module spec: " + j.dump());
}

json ModuleSpec::to_json() const {
    switch (kind) {
        case Kind::Regular:
            return json{{"regular", true}};
        case Kind::Quotient:
            return json{{"quotient", {{"gens", gens}}}};
        case Kind::DirectSum: {
            json parts = json::array();
            for (const auto& s : summands) parts.push_back(s.to_json());
            return json{{"sum", parts}};
        }
    }
    throw MalformedSpec("corrupt module spec");
}

RingSpec RingSpec::zn(int n) {
    RingSpec s;
    s.kind = Kind::Zn;
    s.n = n;
    return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
    if (factors.empty()) throw MalformedSpec("product needs at least one factor");
    RingSpec s;
    s.kind = Kind::Product;
    s.factors = std::move(factors);
    return s;
}

RingSpec RingSpec::quotient(RingSpec base, std::vector<int> gens) {
    RingSpec s;
    s.kind = Kind::Quotient;
    s.base = std::make_shared<RingSpec>(std::move(base));
    s.gens = std::move(gens);
    return s;
}

RingSpec RingSpec::localization(RingSpec base, std::vector<int> s_gens) {
    RingSpec s;
    s.kind = Kind::Localization;
    s.base = std::make_shared<RingSpec>(std::move(base));
    s.gens = std::move(s_gens);
    return s;
}

RingSpec RingSpec::idealization(RingSpec base, ModuleSpec module) {
    RingSpec s;
    s.kind = Kind::Idealization;
    s.base = std::make_shared<RingSpec>(std::move(base));
    s.module = std::make_shared<ModuleSpec>(std::move(module));
    return s;
}

RingSpec RingSpec::from_json(const json& j) {
    if (!j.is_object()) throw MalformedSpec("ring spec must be a JSON object");
    if (j.contains("zn")) return zn(j.at("zn").get<int>());
    if (j.contains("product")) {
        std::vector<RingSpec> fs;
        for (const auto& f : j.at("product")) fs.push_back(from_json(f));
        return product(std::move(fs));
    }
    if (j.contains("quotient")) {
        const auto& q = j.at("quotient");
        return quotient(from_json(q.at("base")), q.at("gens").get<std::vector<int>>());
    }
    if (j.contains("localize")) {
        const auto& l = j.at("localize");
        return localization(from_json(l.at("base")), l.at("s").get<std::vector<int>>());
    }
    if (j.contains("idealize")) {
        const auto& i = j.at("idealize");
        return idealization(from_json(i.at("base")), ModuleSpec::from_json(i.at("module")));
    }
    throw MalformedSpec("unrecognized ring spec: " + j.dump());
}

json RingSpec::to_json() const {
    switch (kind) {
        case Kind::Zn:
            return json{{"zn", n}};
        case Kind::Product: {
            json fs = json::array();
            for (const auto& f : factors) fs.push_back(f.to_json());
            return json{{"product", fs}};
        }
        case Kind::Quotient:
            return json{{"quotient", {{"base", base->to_json()}, {"gens", gens}}}};
        case Kind::Localization:
            return json{{"localize", {{"base", base->to_json()}, {"s", gens}}}};
        case Kind::Idealization:
            return json{{"idealize", {{"base", base->to_json()}, {"module", module->to_json()}}}};
    }
    throw MalformedSpec("corrupt ring spec");
}

std::string content_hash(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (i * 4)) & 0xf);
    return os.str();
}

}  // namespace absorblab
