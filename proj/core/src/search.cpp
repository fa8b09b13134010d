#include "absorblab/search.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace absorblab {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

SearchTerm parse_atom(const std::string& raw) {
    SearchTerm term;
    std::string s = lower(raw);

    if (s.rfind("weakly-", 0) == 0) {
        term.phi = PhiSpec::zero();
        s = s.substr(7);
    } else if (s.rfind("omega-", 0) == 0) {
        term.phi = PhiSpec::omega_phi();
        s = s.substr(6);
    } else if (s.rfind("almost-", 0) == 0) {
        term.phi = PhiSpec::power(2);
        s = s.substr(7);
    } else {
        std::size_t dash = s.find("-almost-");
        if (dash != std::string::npos && dash > 0 &&
            std::all_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(dash),
                        [](unsigned char c) { return std::isdigit(c); })) {
            int n = std::stoi(s.substr(0, dash));
            term.phi = PhiSpec::power(n);
            s = s.substr(dash + 8);
        } else {
            term.phi = PhiSpec::empty();
        }
    }

    if (s == "prime") term.prop = Property::Prime;
    else if (s == "quasi-primary") term.prop = Property::QuasiPrimary;
    else if (s == "2-absorbing") term.prop = Property::TwoAbsorbing;
    else if (s == "2-absorbing-primary") term.prop = Property::TwoAbsorbingPrimary;
    else if (s == "2-absorbing-quasi-primary" || s == "2aqp")
        term.prop = Property::TwoAbsorbingQuasiPrimary;
    else throw BadExpression("unknown predicate: " + raw);
    return term;
}

}  // namespace

SearchExpr SearchExpr::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw BadExpression("empty expression");

    SearchExpr expr;
    std::size_t i = 0;
    for (;;) {
        bool negated = false;
        if (i < tokens.size() && lower(tokens[i]) == "not") {
            negated = true;
            ++i;
        }
        if (i >= tokens.size()) throw BadExpression("dangling NOT");
        SearchTerm term = parse_atom(tokens[i++]);
        term.negated = negated;
        expr.terms.push_back(term);
        if (i == tokens.size()) break;
        if (lower(tokens[i]) != "and") throw BadExpression("expected AND near: " + tokens[i]);
        ++i;
        if (i == tokens.size()) throw BadExpression("dangling AND");
    }
    return expr;
}

SearchResult search_counterexample(const SearchExpr& expr,
                                   const std::vector<FiniteRing>& corpus, std::int64_t budget,
                                   int order_cap) {
    SearchResult result;
    for (const FiniteRing& R : corpus) {
        for (const Ideal& I : enumerate_ideals(R, order_cap)) {
            if (!I.proper(R)) continue;
            if (result.instances_tried >= budget) {
                result.status = SearchStatus::BudgetExhausted;
                return result;
            }
            ++result.instances_tried;
            Bitset radI = radical(R, I).members();
            bool all = true;
            for (const SearchTerm& t : expr.terms) {
                PhiValue phiI = phi_eval(t.phi, R, I);
                bool holds = pred::dispatch(t.prop, R, I.members(), phiI, radI).holds;
                if (holds == t.negated) {
                    all = false;
                    break;
                }
            }
            if (all) {
                result.status = SearchStatus::Found;
                result.ring = R.key();
                result.ideal = I.elements();
                return result;
            }
        }
    }
    result.status = SearchStatus::NotFound;
    return result;
}

SearchResult search_counterexample(const std::string& expr, const std::vector<FiniteRing>& corpus,
                                   std::int64_t budget, int order_cap) {
    return search_counterexample(SearchExpr::parse(expr), corpus, budget, order_cap);
}

json SearchResult::to_json() const {
    json out;
    switch (status) {
        case SearchStatus::Found:
            out["status"] = "found";
            out["ring"] = json::parse(ring);
            out["ideal"] = ideal;
            break;
        case SearchStatus::NotFound:
            out["status"] = "none";
            break;
        case SearchStatus::BudgetExhausted:
            out["status"] = "budget_exhausted";
            break;
    }
    out["instances_tried"] = instances_tried;
    return out;
}

}  // namespace absorblab
