#include <doctest.h>

#include "absorblab/report.hpp"
#include "test_helpers.hpp"

using namespace absorblab;
using namespace absorblab::test;

TEST_CASE("diagram edges match the hard-coded implication list (n_max = 2)") {
    const std::string EQ = "phi(rad I) = rad(phi I)";
    const std::string SUB = "phi(rad I) in phi(I)";
    const std::string FIX = "rad(I) = I";

    // Unconditional arrows: the two ladder chains plus the quasi-primary ->
    // 2-absorbing-primary -> 2AQP triangle at each phi. Nothing else.
    std::vector<DiagramEdge> expected_plain = {
        {"qp@phi_empty", "qp@phi_0", ""},
        {"qp@phi_0", "qp@phi_omega", ""},
        {"qp@phi_omega", "qp@phi_2", ""},
        {"qp@phi_2", "qp@phi_1", ""},
        {"2aqp@phi_empty", "2aqp@phi_0", ""},
        {"2aqp@phi_0", "2aqp@phi_omega", ""},
        {"2aqp@phi_omega", "2aqp@phi_2", ""},
        {"2aqp@phi_2", "2aqp@phi_1", ""},
        {"qp@phi_empty", "2ap@phi_empty", ""},
        {"2ap@phi_empty", "2aqp@phi_empty", ""},
        {"qp@phi_empty", "2aqp@phi_empty", ""},
        {"qp@phi_0", "2ap@phi_0", ""},
        {"2ap@phi_0", "2aqp@phi_0", ""},
        {"qp@phi_0", "2aqp@phi_0", ""},
        {"qp@phi_omega", "2ap@phi_omega", ""},
        {"2ap@phi_omega", "2aqp@phi_omega", ""},
        {"qp@phi_omega", "2aqp@phi_omega", ""},
        {"qp@phi_2", "2ap@phi_2", ""},
        {"2ap@phi_2", "2aqp@phi_2", ""},
        {"qp@phi_2", "2aqp@phi_2", ""},
        {"qp@phi_1", "2ap@phi_1", ""},
        {"2ap@phi_1", "2aqp@phi_1", ""},
        {"qp@phi_1", "2aqp@phi_1", ""},
    };

    // Conditional radical links carry their side conditions as labels.
    std::vector<DiagramEdge> expected_labeled;
    for (const char* phi : {"phi_empty", "phi_0", "phi_omega", "phi_2", "phi_1"}) {
        std::string p(phi);
        expected_labeled.push_back({"2aqp@" + p, "2abs@" + p, FIX});
        expected_labeled.push_back({"2abs@" + p, "2aqp@" + p, FIX});
        expected_labeled.push_back({"2aqp@" + p, "rad_2abs@" + p, EQ});
        expected_labeled.push_back({"rad_2abs@" + p, "2aqp@" + p, SUB});
        expected_labeled.push_back({"qp@" + p, "rad_prime@" + p, EQ});
        expected_labeled.push_back({"rad_prime@" + p, "qp@" + p, SUB});
    }

    std::vector<DiagramEdge> got = diagram_edges(2);
    std::vector<DiagramEdge> plain, labeled;
    for (const DiagramEdge& e : got) (e.label.empty() ? plain : labeled).push_back(e);

    auto key = [](const DiagramEdge& e) { return e.from + ">" + e.to + "|" + e.label; };
    auto sorted_keys = [&](std::vector<DiagramEdge> v) {
        std::vector<std::string> ks;
        for (const auto& e : v) ks.push_back(key(e));
        std::sort(ks.begin(), ks.end());
        return ks;
    };
    CHECK(sorted_keys(plain) == sorted_keys(expected_plain));
    CHECK(sorted_keys(labeled) == sorted_keys(expected_labeled));
}

TEST_CASE("dot rendering highlights true classes") {
    FiniteRing R = zn(12);
    std::string dot = render_dot(R, principal(R, 6), 2);
    CHECK(dot.find("digraph") != std::string::npos);
    // (6) is 2AQP at phi_empty but not quasi primary there
    CHECK(dot.find("\"2aqp@phi_empty\" [label=\"phi_empty-2-absorbing quasi primary\", style=filled") !=
          std::string::npos);
    CHECK(dot.find("\"qp@phi_empty\" [label=\"phi_empty-quasi primary\"];") != std::string::npos);
    // every node id appears
    for (const std::string& n : diagram_nodes(2)) CHECK(dot.find("\"" + n + "\"") != std::string::npos);
}

TEST_CASE("csv flattening has one row per cell") {
    FiniteRing R = zn(12);
    ClassificationReport rep = classify(R, principal(R, 6), 2);
    std::string csv = classification_csv(rep);
    std::size_t rows = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(rows == 1 + 5 * rep.ladder.size());  // header + property x phi
    CHECK(csv.find("quasi_primary,phi_1,true") != std::string::npos);
    CHECK(csv.find("quasi_primary,phi_empty,false") != std::string::npos);
}
