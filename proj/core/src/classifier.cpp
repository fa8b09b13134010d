#include "absorblab/classifier.hpp"

#include <algorithm>

namespace absorblab {

std::string property_name(Property p) {
    switch (p) {
        case Property::Prime: return "prime";
        case Property::QuasiPrimary: return "quasi_primary";
        case Property::TwoAbsorbing: return "two_absorbing";
        case Property::TwoAbsorbingPrimary: return "two_absorbing_primary";
        case Property::TwoAbsorbingQuasiPrimary: return "two_absorbing_quasi_primary";
    }
    return "?";
}

namespace pred {

namespace {

// I - phi(I) membership test without materializing the difference.
inline bool in_diff(const Bitset& I, const PhiValue& phiI, int x) {
    std::size_t u = static_cast<std::size_t>(x);
    return I.test(u) && !(phiI && phiI->test(u));
}

}  // namespace

PredicateOutcome prime(const FiniteRing& R, const Bitset& I, const PhiValue& phiI) {
    int n = R.order();
    // The condition is symmetric in (a,b); the first sorted violation is also
    // the lexicographically first ordered one.
    for (int a = 0; a < n; ++a) {
        if (I.test(static_cast<std::size_t>(a))) continue;
        for (int b = a; b < n; ++b) {
            if (I.test(static_cast<std::size_t>(b))) continue;
            if (in_diff(I, phiI, R.mul(a, b))) return {false, {a, b}};
        }
    }
    return {};
}

PredicateOutcome quasi_primary(const FiniteRing& R, const Bitset& I, const PhiValue& phiI,
                               const Bitset& radI) {
    int n = R.order();
    for (int a = 0; a < n; ++a) {
        if (radI.test(static_cast<std::size_t>(a))) continue;
        for (int b = a; b < n; ++b) {
            if (radI.test(static_cast<std::size_t>(b))) continue;
            if (in_diff(I, phiI, R.mul(a, b))) return {false, {a, b}};
        }
    }
    return {};
}

PredicateOutcome two_absorbing(const FiniteRing& R, const Bitset& I, const PhiValue& phiI) {
    int n = R.order();
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            int ab = R.mul(a, b);
            bool ab_in = I.test(static_cast<std::size_t>(ab));
            for (int c = b; c < n; ++c) {
                if (!in_diff(I, phiI, R.mul(ab, c))) continue;
                if (ab_in) continue;
                if (I.test(static_cast<std::size_t>(R.mul(a, c)))) continue;
                if (I.test(static_cast<std::size_t>(R.mul(b, c)))) continue;
                return {false, {a, b, c}};
            }
        }
    }
    return {};
}

PredicateOutcome two_absorbing_primary(const FiniteRing& R, const Bitset& I, const PhiValue& phiI,
                                       const Bitset& radI) {
    int n = R.order();
    // ab is tested against I but ac, bc against rad(I): the condition is not
    // symmetric, so all ordered triples are enumerated.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int ab = R.mul(a, b);
            if (I.test(static_cast<std::size_t>(ab))) continue;
            for (int c = 0; c < n; ++c) {
                if (!in_diff(I, phiI, R.mul(ab, c))) continue;
                if (radI.test(static_cast<std::size_t>(R.mul(a, c)))) continue;
                if (radI.test(static_cast<std::size_t>(R.mul(b, c)))) continue;
                return {false, {a, b, c}};
            }
        }
    }
    return {};
}

PredicateOutcome two_absorbing_quasi_primary(const FiniteRing& R, const Bitset& I,
                                             const PhiValue& phiI, const Bitset& radI) {
    int n = R.order();
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            int ab = R.mul(a, b);
            bool ab_in = radI.test(static_cast<std::size_t>(ab));
            for (int c = b; c < n; ++c) {
                if (!in_diff(I, phiI, R.mul(ab, c))) continue;
                if (ab_in) continue;
                if (radI.test(static_cast<std::size_t>(R.mul(a, c)))) continue;
                if (radI.test(static_cast<std::size_t>(R.mul(b, c)))) continue;
                return {false, {a, b, c}};
            }
        }
    }
    return {};
}

PredicateOutcome dispatch(Property p, const FiniteRing& R, const Bitset& I, const PhiValue& phiI,
                          const Bitset& radI) {
    switch (p) {
        case Property::Prime: return prime(R, I, phiI);
        case Property::QuasiPrimary: return quasi_primary(R, I, phiI, radI);
        case Property::TwoAbsorbing: return two_absorbing(R, I, phiI);
        case Property::TwoAbsorbingPrimary: return two_absorbing_primary(R, I, phiI, radI);
        case Property::TwoAbsorbingQuasiPrimary:
            return two_absorbing_quasi_primary(R, I, phiI, radI);
    }
    throw Error("unreachable property");
}

}  // namespace pred

namespace {

void require_proper(const FiniteRing& ring, const Ideal& I) {
    if (I.ring_key() != ring.key()) throw RingMismatch("ideal from another ring");
    if (!I.proper(ring)) throw ImproperIdeal("predicate requires a proper ideal");
}

}  // namespace

PredicateOutcome is_phi_prime(const FiniteRing& ring, const Ideal& I, const PhiSpec& phi) {
    require_proper(ring, I);
    return pred::prime(ring, I.members(), phi_eval(phi, ring, I));
}

PredicateOutcome is_phi_quasi_primary(const FiniteRing& ring, const Ideal& I, const PhiSpec& phi) {
    require_proper(ring, I);
    return pred::quasi_primary(ring, I.members(), phi_eval(phi, ring, I),
                               radical(ring, I).members());
}

PredicateOutcome is_phi_two_absorbing(const FiniteRing& ring, const Ideal& I, const PhiSpec& phi) {
    require_proper(ring, I);
    return pred::two_absorbing(ring, I.members(), phi_eval(phi, ring, I));
}

PredicateOutcome is_phi_two_absorbing_primary(const FiniteRing& ring, const Ideal& I,
                                              const PhiSpec& phi) {
    require_proper(ring, I);
    return pred::two_absorbing_primary(ring, I.members(), phi_eval(phi, ring, I),
                                       radical(ring, I).members());
}

PredicateOutcome is_phi_2aqp(const FiniteRing& ring, const Ideal& I, const PhiSpec& phi,
                             TwoAqpRoute route) {
    require_proper(ring, I);
    switch (route) {
        case TwoAqpRoute::Elementwise:
            return pred::two_absorbing_quasi_primary(ring, I.members(), phi_eval(phi, ring, I),
                                                     radical(ring, I).members());
        case TwoAqpRoute::Radical: {
            if (phi.kind != PhiSpec::Kind::Empty)
                throw RouteUnavailable("the radical route is defined for phi_empty only");
            Ideal radI = radical(ring, I);
            return pred::two_absorbing(ring, radI.members(), std::nullopt);
        }
    }
    throw Error("unreachable route");
}

std::vector<std::array<int, 3>> strongly_triple_zeros(const FiniteRing& ring, const Ideal& I,
                                                      const PhiValue& phiI) {
    if (I.ring_key() != ring.key()) throw RingMismatch("ideal from another ring");
    if (!I.proper(ring)) throw ImproperIdeal("strongly_triple_zeros requires a proper ideal");
    std::vector<std::array<int, 3>> out;
    if (!phiI) return out;  // abc in emptyset is impossible
    Bitset radI = radical(ring, I).members();
    int n = ring.order();
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            int ab = ring.mul(a, b);
            if (radI.test(static_cast<std::size_t>(ab))) continue;
            for (int c = b; c < n; ++c) {
                if (!phiI->test(static_cast<std::size_t>(ring.mul(ab, c)))) continue;
                if (radI.test(static_cast<std::size_t>(ring.mul(a, c)))) continue;
                if (radI.test(static_cast<std::size_t>(ring.mul(b, c)))) continue;
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

std::vector<std::array<int, 3>> strongly_triple_zeros(const FiniteRing& ring, const Ideal& I,
                                                      const PhiSpec& phi) {
    return strongly_triple_zeros(ring, I, phi_eval(phi, ring, I));
}

ClassificationReport classify(const FiniteRing& ring, const Ideal& I, int n_max) {
    require_proper(ring, I);
    ClassificationReport rep;
    rep.ring_spec = ring.key();
    rep.ring_hash = content_hash(ring.key());
    rep.ideal_members = I.elements();
    rep.ladder = standard_ladder(n_max);

    Bitset radI = radical(ring, I).members();
    for (Property p : kAllProperties) rep.matrix[p] = {};

    for (int j = 0; j < static_cast<int>(rep.ladder.size()); ++j) {
        PhiValue phiI = phi_eval(rep.ladder[static_cast<std::size_t>(j)], ring, I);
        for (Property p : kAllProperties) {
            PredicateOutcome out = pred::dispatch(p, ring, I.members(), phiI, radI);
            rep.matrix[p].push_back(out.holds);
            if (!out.holds) rep.witnesses.push_back({p, j, out.witness});
        }
        auto zeros = strongly_triple_zeros(ring, I, phiI);
        if (!zeros.empty()) rep.triple_zeros.push_back({j, std::move(zeros)});
    }

    // Ladder monotonicity and the Thm-t2 implication chain double-check the
    // predicate implementations; a breach is a classifier bug.
    for (Property p : kAllProperties) {
        const auto& row = rep.matrix[p];
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j - 1] && !row[j])
                throw AxiomViolation("classification matrix not monotone along the phi ladder");
    }
    for (std::size_t j = 0; j < rep.ladder.size(); ++j) {
        bool qp = rep.matrix[Property::QuasiPrimary][j];
        bool tap = rep.matrix[Property::TwoAbsorbingPrimary][j];
        bool taqp = rep.matrix[Property::TwoAbsorbingQuasiPrimary][j];
        if ((qp && !tap) || (tap && !taqp))
            throw AxiomViolation("classification matrix breaks the quasi-primary chain");
    }
    return rep;
}

json ClassificationReport::to_json() const {
    json matrix_j = json::object();
    for (const auto& [p, row] : matrix) {
        json row_j = json::object();
        for (std::size_t j = 0; j < row.size(); ++j) row_j[ladder[j].name()] = static_cast<bool>(row[j]);
        matrix_j[property_name(p)] = row_j;
    }
    json witnesses_j = json::array();
    for (const auto& w : witnesses) {
        witnesses_j.push_back(json{{"property", property_name(w.prop)},
                                   {"phi", ladder[static_cast<std::size_t>(w.phi_index)].name()},
                                   {"tuple", w.tuple}});
    }
    json zeros_j = json::array();
    for (const auto& z : triple_zeros) {
        json triples = json::array();
        for (const auto& t : z.triples) triples.push_back(json::array({t[0], t[1], t[2]}));
        zeros_j.push_back(json{{"phi", ladder[static_cast<std::size_t>(z.phi_index)].name()},
                               {"triples", triples}});
    }
    return json{{"ring", json::parse(ring_spec)},
                {"ring_hash", ring_hash},
                {"ideal", ideal_members},
                {"matrix", matrix_j},
                {"witnesses", witnesses_j},
                {"triple_zeros", zeros_j}};
}

}  // namespace absorblab
