#pragma once

#include <string>
#include <vector>

#include "absorblab/classifier.hpp"

namespace absorblab {

// The implication diagram between the phi-ideal classes. Edges are exactly
// the implications proven in the source results: the phi-ladder transfer
// chains, the quasi-primary -> 2-absorbing-primary -> 2AQP chain, and the
// radical links with their side conditions as labels. Nothing else.
struct DiagramEdge {
    std::string from;
    std::string to;
    std::string label;  // side condition; empty for unconditional edges

    bool operator==(const DiagramEdge& o) const {
        return from == o.from && to == o.to && label == o.label;
    }
};

std::vector<std::string> diagram_nodes(int n_max);
std::vector<DiagramEdge> diagram_edges(int n_max);

// Graphviz rendering with the ideal's true classes highlighted.
std::string render_dot(const FiniteRing& ring, const Ideal& I, int n_max);

// One row per (ideal, property, phi) cell.
std::string classification_csv(const ClassificationReport& report);

}  // namespace absorblab
