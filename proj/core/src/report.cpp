#include "absorblab/report.hpp"

#include <sstream>

namespace absorblab {

namespace {

const char* kCondEq = "phi(rad I) = rad(phi I)";
const char* kCondSub = "phi(rad I) in phi(I)";
const char* kCondFix = "rad(I) = I";

std::string node_id(const char* stem, const PhiSpec& phi) {
    return std::string(stem) + "@" + phi.name();
}

std::string node_label(const std::string& id) {
    auto at = id.find('@');
    std::string stem = id.substr(0, at);
    std::string phi = id.substr(at + 1);
    if (stem == "qp") return phi + "-quasi primary";
    if (stem == "2ap") return phi + "-2-absorbing primary";
    if (stem == "2aqp") return phi + "-2-absorbing quasi primary";
    if (stem == "2abs") return phi + "-2-absorbing";
    if (stem == "rad_2abs") return "rad(I) " + phi + "-2-absorbing";
    if (stem == "rad_prime") return "rad(I) " + phi + "-prime";
    return id;
}

}  // namespace

std::vector<std::string> diagram_nodes(int n_max) {
    std::vector<std::string> nodes;
    for (const PhiSpec& phi : standard_ladder(n_max)) {
        nodes.push_back(node_id("qp", phi));
        nodes.push_back(node_id("2ap", phi));
        nodes.push_back(node_id("2aqp", phi));
        nodes.push_back(node_id("2abs", phi));
        nodes.push_back(node_id("rad_2abs", phi));
        nodes.push_back(node_id("rad_prime", phi));
    }
    return nodes;
}

std::vector<DiagramEdge> diagram_edges(int n_max) {
    std::vector<DiagramEdge> edges;
    std::vector<PhiSpec> ladder = standard_ladder(n_max);

    // Ladder transfer chains.
    for (std::size_t k = 0; k + 1 < ladder.size(); ++k) {
        edges.push_back({node_id("qp", ladder[k]), node_id("qp", ladder[k + 1]), ""});
        edges.push_back({node_id("2aqp", ladder[k]), node_id("2aqp", ladder[k + 1]), ""});
    }

    for (const PhiSpec& phi : ladder) {
        // quasi primary -> 2-absorbing primary -> 2AQP, plus the composite.
        edges.push_back({node_id("qp", phi), node_id("2ap", phi), ""});
        edges.push_back({node_id("2ap", phi), node_id("2aqp", phi), ""});
        edges.push_back({node_id("qp", phi), node_id("2aqp", phi), ""});

        // Radical links, annotated with their side conditions.
        edges.push_back({node_id("2aqp", phi), node_id("2abs", phi), kCondFix});
        edges.push_back({node_id("2abs", phi), node_id("2aqp", phi), kCondFix});
        edges.push_back({node_id("2aqp", phi), node_id("rad_2abs", phi), kCondEq});
        edges.push_back({node_id("rad_2abs", phi), node_id("2aqp", phi), kCondSub});
        edges.push_back({node_id("qp", phi), node_id("rad_prime", phi), kCondEq});
        edges.push_back({node_id("rad_prime", phi), node_id("qp", phi), kCondSub});
    }
    return edges;
}

std::string render_dot(const FiniteRing& ring, const Ideal& I, int n_max) {
    std::vector<PhiSpec> ladder = standard_ladder(n_max);
    Bitset radI = radical(ring, I).members();

    std::map<std::string, bool> truth;
    for (const PhiSpec& phi : ladder) {
        PhiValue phiI = phi_eval(phi, ring, I);
        PhiValue phiRad = phi_eval(phi, ring, Ideal(ring, radI));
        truth[node_id("qp", phi)] =
            pred::quasi_primary(ring, I.members(), phiI, radI).holds;
        truth[node_id("2ap", phi)] =
            pred::two_absorbing_primary(ring, I.members(), phiI, radI).holds;
        truth[node_id("2aqp", phi)] =
            pred::two_absorbing_quasi_primary(ring, I.members(), phiI, radI).holds;
        truth[node_id("2abs", phi)] = pred::two_absorbing(ring, I.members(), phiI).holds;
        truth[node_id("rad_2abs", phi)] = pred::two_absorbing(ring, radI, phiRad).holds;
        truth[node_id("rad_prime", phi)] = pred::prime(ring, radI, phiRad).holds;
    }

    std::ostringstream os;
    os << "digraph phi_classes {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=box, fontsize=10];\n";
    os << "  label=\"ideal {";
    std::vector<int> elems = I.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? "," : "") << elems[i];
    os << "} of " << content_hash(ring.key()) << "\";\n";
    for (const std::string& n : diagram_nodes(n_max)) {
        os << "  \"" << n << "\" [label=\"" << node_label(n) << "\"";
        if (truth[n]) os << ", style=filled, fillcolor=palegreen";
        os << "];\n";
    }
    for (const DiagramEdge& e : diagram_edges(n_max)) {
        os << "  \"" << e.from << "\" -> \"" << e.to << "\"";
        if (!e.label.empty()) os << " [label=\"" << e.label << "\", style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string classification_csv(const ClassificationReport& report) {
    std::ostringstream os;
    os << "ring,ideal,property,phi,holds,witness\n";
    std::string ideal;
    for (std::size_t i = 0; i < report.ideal_members.size(); ++i)
        ideal += (i ? " " : "") + std::to_string(report.ideal_members[i]);
    for (const auto& [prop, row] : report.matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << report.ring_hash << "," << ideal << "," << property_name(prop) << ","
               << report.ladder[j].name() << "," << (row[j] ? "true" : "false") << ",";
            for (const auto& w : report.witnesses) {
                if (w.prop == prop && w.phi_index == static_cast<int>(j)) {
                    for (std::size_t t = 0; t < w.tuple.size(); ++t)
                        os << (t ? " " : "") << w.tuple[t];
                    break;
                }
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace absorblab
