#include <doctest.h>

#include <set>

#include "absorblab/corpus.hpp"
#include "test_helpers.hpp"

using namespace absorblab;
using namespace absorblab::test;

namespace {

bool contains_spec(const std::vector<FiniteRing>& corpus, const std::string& key) {
    for (const FiniteRing& r : corpus)
        if (r.key() == key) return true;
    return false;
}

}  // namespace

TEST_CASE("default corpus composition") {
    std::vector<FiniteRing> corpus = build_corpus(CorpusSpec::defaults());

    int zn_count = 0, product_count = 0, quotient_count = 0, idealization_count = 0;
    std::set<std::string> keys;
    for (const FiniteRing& r : corpus) {
        CHECK(r.order() <= 64);
        CHECK(keys.insert(r.key()).second);  // duplicate-free
        switch (r.spec().kind) {
            case RingSpec::Kind::Zn: ++zn_count; break;
            case RingSpec::Kind::Product: ++product_count; break;
            case RingSpec::Kind::Quotient: ++quotient_count; break;
            case RingSpec::Kind::Idealization: ++idealization_count; break;
            default: break;
        }
    }
    CHECK(zn_count == 23);       // Z2 .. Z24
    CHECK(quotient_count == 7);  // Z12: d in {2,3,4,6}; Z16: d in {2,4,8}
    CHECK(product_count > 30);
    CHECK(idealization_count > 5);

    CHECK(contains_spec(corpus, RingSpec::product({RingSpec::zn(2), RingSpec::zn(6)}).key()));
    CHECK(contains_spec(corpus,
                        RingSpec::product({RingSpec::zn(2), RingSpec::zn(2), RingSpec::zn(2)}).key()));
    CHECK(contains_spec(corpus, RingSpec::product({RingSpec::zn(8), RingSpec::zn(8)}).key()));
    CHECK(contains_spec(corpus, RingSpec::quotient(RingSpec::zn(12), {4}).key()));
    CHECK(contains_spec(corpus, RingSpec::idealization(RingSpec::zn(2), ModuleSpec::regular()).key()));
}

TEST_CASE("corpus is deterministic") {
    std::vector<FiniteRing> a = build_corpus(CorpusSpec::defaults());
    std::vector<FiniteRing> b = build_corpus(CorpusSpec::defaults());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].key() == b[i].key());
}

TEST_CASE("zn-only corpus") {
    CorpusSpec spec;
    spec.zn_max = 12;
    spec.product_max_factors = 0;
    spec.include_quotients = false;
    spec.include_idealizations = false;
    std::vector<FiniteRing> corpus = build_corpus(spec);
    CHECK(corpus.size() == 11);  // Z2 .. Z12
}

TEST_CASE("pair corpus up to Z6 x Z6") {
    CorpusSpec spec;
    spec.zn_max = 6;
    spec.product_max_factors = 2;
    spec.product_zn_max = 6;
    spec.product_order_cap = 36;
    spec.include_quotients = false;
    spec.include_idealizations = false;
    std::vector<FiniteRing> corpus = build_corpus(spec);
    CHECK(contains_spec(corpus, RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)}).key()));
    CHECK(contains_spec(corpus, RingSpec::product({RingSpec::zn(6), RingSpec::zn(6)}).key()));
}

TEST_CASE("idealization cap 16 includes Z2xZ2 and Z4xZ4") {
    CorpusSpec spec;
    spec.zn_max = 8;
    spec.product_max_factors = 0;
    spec.include_quotients = false;
    spec.idealization_order_cap = 16;
    std::vector<FiniteRing> corpus = build_corpus(spec);
    CHECK(contains_spec(corpus, RingSpec::idealization(RingSpec::zn(2), ModuleSpec::regular()).key()));
    CHECK(contains_spec(corpus, RingSpec::idealization(RingSpec::zn(4), ModuleSpec::regular()).key()));
}

TEST_CASE("corpus caps are enforced") {
    CorpusSpec spec;
    spec.zn_max = 100;
    CHECK_THROWS_AS(build_corpus(spec), CapExceeded);

    CorpusSpec big;
    big.zn_max = 24;
    big.product_order_cap = 81;
    CHECK_THROWS_AS(build_corpus(big, 64), CapExceeded);
    CHECK_NOTHROW(build_corpus(big, 81));  // explicit larger bound admits it

    json j = CorpusSpec::defaults().to_json();
    CorpusSpec round = CorpusSpec::from_json(j);
    CHECK(round.to_json() == j);
}
