#include <doctest.h>

#include "absorblab/theorems.hpp"
#include "test_helpers.hpp"

using namespace absorblab;
using namespace absorblab::test;

namespace {

std::vector<FiniteRing> small_corpus() {
    return {zn(4), zn(6), zn(12), product({2, 2}), product({2, 6}), product({2, 2, 2})};
}

}  // namespace

TEST_CASE("theorem registry") {
    CHECK(all_theorem_ids().size() == 24);
    CHECK(known_theorem("T-PC"));
    CHECK_FALSE(known_theorem("T-BOGUS"));
    CHECK_THROWS_AS(verify("T-BOGUS", small_corpus()), UnknownTheorem);
}

TEST_CASE("hierarchy theorems hold on the small corpus") {
    VerifyOptions opts;
    opts.n_max = 3;
    for (const char* id : {"T-PP", "T-T1", "T-T2", "T-TTC", "T-EQUIV", "T-WQP", "T-METHOD"}) {
        VerificationReport rep = verify(id, small_corpus(), opts);
        INFO(id);
        CHECK(rep.verified());
        CHECK(rep.non_vacuous() > 0);
    }
}

TEST_CASE("quotient transfer theorems hold on the small corpus") {
    VerifyOptions opts;
    opts.n_max = 3;
    for (const char* id : {"T-PQ", "T-PQ2"}) {
        VerificationReport rep = verify(id, small_corpus(), opts);
        INFO(id);
        CHECK(rep.verified());
        CHECK(rep.non_vacuous() > 0);
    }
}

TEST_CASE("T-PC flags exactly the weakly-2AQP-not-2AQP ideals") {
    VerificationReport rep = verify("T-PC", small_corpus());
    CHECK(rep.verified());
    REQUIRE(rep.details.count("hypothesis_instances"));
    CHECK(rep.details.at("hypothesis_instances") == static_cast<std::int64_t>(rep.flagged.size()));
    // the zero ideals of Z2 x Z6 and Z2^3 are the witnesses here
    CHECK(rep.flagged.size() == 2);
    bool saw_z2z6 = false, saw_z222 = false;
    for (const json& f : rep.flagged) {
        if (f.at("ring") == json::parse(R"({"product":[{"zn":2},{"zn":6}]})")) saw_z2z6 = true;
        if (f.at("ring") == json::parse(R"({"product":[{"zn":2},{"zn":2},{"zn":2}]})"))
            saw_z222 = true;
        CHECK(f.at("ideal") == json::array({0}));
    }
    CHECK(saw_z2z6);
    CHECK(saw_z222);

    CHECK(verify("T-COR2", small_corpus()).verified());
}

TEST_CASE("T-NAK holds on the small corpus") {
    VerificationReport rep = verify("T-NAK", small_corpus());
    CHECK(rep.verified());
    CHECK(rep.non_vacuous() > 0);
    CHECK(rep.details.at("modules") > 0);
}

TEST_CASE("T-QUO holds on Z12 and localizing kills nothing it should not") {
    VerifyOptions opts;
    opts.n_max = 3;
    VerificationReport rep = verify("T-QUO", {zn(12)}, opts);
    CHECK(rep.verified());
    CHECK(rep.non_vacuous() > 0);
    CHECK(rep.details.at("rings_in_scope") == 1);
    CHECK(rep.details.at("multiplicative_sets") > 3);
}

TEST_CASE("T-IDEALZ on small idealizations") {
    std::vector<FiniteRing> corpus = {
        build_ring(RingSpec::idealization(RingSpec::zn(2), ModuleSpec::regular())),
        build_ring(RingSpec::idealization(RingSpec::zn(4), ModuleSpec::regular())),
        build_ring(RingSpec::idealization(
            RingSpec::product({RingSpec::zn(2), RingSpec::zn(2), RingSpec::zn(2)}),
            ModuleSpec::quotient({1, 2, 3}))),  // Z2^3 / span{001,010,011}
    };
    VerificationReport rep = verify("T-IDEALZ", corpus);
    CHECK(rep.verified());
    CHECK(rep.non_vacuous() > 0);
    CHECK(rep.details.at("triple_zero_instances") > 0);
}

TEST_CASE("T-VNR distinguishes Z2xZ3xZ5 from Z4xZ2xZ2") {
    std::vector<FiniteRing> corpus = {product({2, 3, 5}), product({4, 2, 2})};
    VerificationReport rep = verify("T-VNR", corpus);
    CHECK(rep.verified());
    CHECK(rep.details.at("products_in_scope") == 2);
    CHECK(rep.non_vacuous() > 0);
}

TEST_CASE("product suite holds on small products") {
    std::vector<FiniteRing> corpus = {product({2, 2}), product({2, 4}), product({2, 6}),
                                      product({2, 2, 2})};
    VerifyOptions opts;
    opts.n_max = 2;
    for (const char* id : {"T-TSI", "T-PRODN", "T-CAR", "T-CAR2", "T-WEAK1", "T-WEAK2",
                           "T-WEAK3", "T-CAR3", "T-CAR4"}) {
        VerificationReport rep = verify(id, corpus, opts);
        INFO(id);
        CHECK(rep.verified());
    }
}

TEST_CASE("reports are deterministic and parallel-safe") {
    std::vector<FiniteRing> corpus = small_corpus();
    std::vector<std::string> ids = {"T-T2", "T-PC", "T-TSI"};
    VerifyOptions opts;
    opts.n_max = 3;

    auto dump = [](const std::vector<VerificationReport>& reps) {
        std::string out;
        for (const auto& r : reps) out += r.to_json().dump(2) + "\n";
        return out;
    };

    std::string first = dump(verify_many(ids, corpus, opts));
    std::string second = dump(verify_many(ids, corpus, opts));
    CHECK(first == second);

    VerifyOptions parallel = opts;
    parallel.jobs = 3;
    CHECK(dump(verify_many(ids, corpus, parallel)) == first);
}
