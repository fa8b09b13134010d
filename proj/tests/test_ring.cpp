#include <doctest.h>

#include "absorblab/ring.hpp"
#include "test_helpers.hpp"

using namespace absorblab;
using namespace absorblab::test;

TEST_CASE("Zn construction") {
    FiniteRing R = zn(12);
    CHECK(R.order() == 12);
    CHECK(R.zero() == 0);
    CHECK(R.one() == 1);
    CHECK(R.add(7, 8) == 3);
    CHECK(R.mul(5, 7) == 11);
    CHECK(R.neg(5) == 7);
    CHECK(R.label(3) == "3");

    CHECK_THROWS_AS(zn(1), MalformedSpec);
    CHECK_THROWS_AS(zn(0), MalformedSpec);
    CHECK_THROWS_AS(build_ring(RingSpec::zn(300)), OrderTooLarge);
}

TEST_CASE("product rings are componentwise") {
    FiniteRing R = product({2, 2, 2});
    CHECK(R.order() == 8);
    CHECK(R.product_arity() == 3);
    // first factor most significant
    std::vector<int> comps = {1, 0, 1};
    int x = R.product_encode(comps);
    CHECK(R.product_decode(x) == comps);
    CHECK(R.label(x) == "(1,0,1)");

    FiniteRing S = product({2, 3});
    CHECK(S.order() == 6);
    int a = S.product_encode(std::vector<int>{1, 2});
    int b = S.product_encode(std::vector<int>{1, 1});
    CHECK(S.mul(a, b) == S.product_encode(std::vector<int>{1, 2}));
    CHECK(S.add(a, b) == S.product_encode(std::vector<int>{0, 0}));

    CHECK_THROWS_AS(zn(2).product_arity(), SpecMismatch);
}

TEST_CASE("quotient ring Z12/(4) is Z4") {
    FiniteRing Q = build_ring(RingSpec::quotient(RingSpec::zn(12), {4}));
    CHECK(Q.order() == 4);
    CHECK(Q.label(2) == "2+I");
    // brute-force table comparison against Zn(4)
    CHECK(iso_oracle(Q, zn(4)));

    // improper quotient rejected
    CHECK_THROWS_AS(build_ring(RingSpec::quotient(RingSpec::zn(12), {5})), MalformedSpec);
    // quotient by (0) keeps the ring
    FiniteRing Q0 = build_ring(RingSpec::quotient(RingSpec::zn(6), {0}));
    CHECK(Q0.order() == 6);
}

TEST_CASE("localization of Z12 at {4}") {
    auto [L, hom] = localize(zn(12), {4});
    CHECK(L.order() == 3);
    CHECK(iso_oracle(L, zn(3)));
    // ker(hom) = {r | tr = 0 for some t in S} = {r | 4r = 0 mod 12} = (3)
    for (int r = 0; r < 12; ++r) CHECK((hom[static_cast<std::size_t>(r)] == L.zero()) == (r % 3 == 0));
    CHECK(hom[4] != L.zero());

    auto [L1, hom1] = localize(zn(12), {1});
    CHECK(L1.order() == 12);
    CHECK(ring_isomorphic(L1, zn(12)));
    // hom bijective
    std::vector<char> seen(12, 0);
    for (int r = 0; r < 12; ++r) seen[static_cast<std::size_t>(hom1[static_cast<std::size_t>(r)])] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == 12);

    // 5 is a unit of Z6, so S = {1,5} localizes to an isomorphic ring
    auto [L5, hom5] = localize(zn(6), {5});
    CHECK(L5.order() == 6);
    CHECK(iso_oracle(L5, zn(6)));

    CHECK_THROWS_AS(localize(zn(12), {6}), ZeroInS);  // 6*6 = 0 mod 12... closure hits 0
}

TEST_CASE("localization at units is an isomorphism (property)") {
    for (int n : {4, 6, 8, 9, 10, 12}) {
        FiniteRing R = zn(n);
        std::vector<int> units;
        for (int a = 1; a < n; ++a)
            if (R.is_unit(a)) units.push_back(a);
        auto [L, hom] = localize(R, units);
        CHECK(ring_isomorphic(L, R));
    }
}

TEST_CASE("idealization R x M") {
    FiniteRing B = zn(2);
    FiniteModule M = build_module(B, ModuleSpec::regular());
    FiniteRing R = idealize(B, M);
    CHECK(R.order() == 4);
    // (1,1)*(1,1) = (1, 1+1) = (1,0)
    int x = R.idealization_encode(1, 1);
    CHECK(R.mul(x, x) == R.idealization_encode(1, 0));

    FiniteRing B4 = zn(4);
    FiniteRing R16 = idealize(B4, build_module(B4, ModuleSpec::regular()));
    CHECK(R16.order() == 16);
    // (0,m)(0,m') = (0,0) for all m, m'
    for (int m = 0; m < 4; ++m)
        for (int m2 = 0; m2 < 4; ++m2)
            CHECK(R16.mul(R16.idealization_encode(0, m), R16.idealization_encode(0, m2)) == 0);

    FiniteRing B22 = product({2, 2});
    FiniteRing R22 = idealize(B22, build_module(B22, ModuleSpec::regular()));
    CHECK(R22.order() == 16);
    CHECK_NOTHROW(check_ring_axioms(R22));
}

TEST_CASE("the module part of an idealization is a square-zero ideal") {
    for (int n : {2, 3, 4, 5}) {
        FiniteRing B = zn(n);
        FiniteRing R = idealize(B, build_module(B, ModuleSpec::regular()));
        CHECK(R.order() == n * n);
        Bitset zm(static_cast<std::size_t>(R.order()));
        for (int m = 0; m < n; ++m) zm.set(static_cast<std::size_t>(R.idealization_encode(0, m)));
        CHECK(is_ideal_set(R, zm));
        Ideal zmi(R, zm);
        CHECK(ideal_op(R, IdealOp::Product, zmi, zmi).members() == zero_ideal(R).members());
    }
}

TEST_CASE("module variants") {
    FiniteRing R = zn(12);
    FiniteModule reg = build_module(R, ModuleSpec::regular());
    CHECK(reg.order() == 12);
    CHECK(reg.scalar(5, 7) == 11);

    FiniteModule q = build_module(R, ModuleSpec::quotient({4}));
    CHECK(q.order() == 4);
    CHECK(q.scalar(2, 3) == q.add(q.add(3, 3), 0));  // 2*(3+N) = 6+N = 2+N

    FiniteRing S = zn(2);
    FiniteModule sum = build_module(S, ModuleSpec::direct_sum({ModuleSpec::regular(), ModuleSpec::regular()}));
    CHECK(sum.order() == 4);
    CHECK_NOTHROW(check_module_axioms(sum));

    CHECK_THROWS_AS(build_module(R, ModuleSpec::quotient({1})), MalformedSpec);
}

TEST_CASE("von Neumann regular detection") {
    CHECK(is_von_neumann_regular(zn(6)));
    CHECK_FALSE(is_von_neumann_regular(zn(4)));
    CHECK(is_von_neumann_regular(product({2, 3, 5})));
    // cross-check against the squarefree oracle
    for (int n = 2; n <= 30; ++n) CHECK(is_von_neumann_regular(zn(n)) == squarefree(n));
    // products are regular exactly when every factor is
    for (auto factors : {std::vector<int>{2, 3}, {2, 4}, {4, 9}, {2, 3, 5}, {2, 2, 8}, {6, 6}}) {
        FiniteRing P = [&] {
            std::vector<RingSpec> fs;
            for (int n : factors) fs.push_back(RingSpec::zn(n));
            return build_ring(RingSpec::product(std::move(fs)));
        }();
        bool all = true;
        for (int n : factors) all = all && is_von_neumann_regular(zn(n));
        CHECK(is_von_neumann_regular(P) == all);
    }
}

TEST_CASE("ring isomorphism search") {
    CHECK(ring_isomorphic(zn(2), zn(2)));
    CHECK(ring_isomorphic(zn(4), build_ring(RingSpec::quotient(RingSpec::zn(12), {4}))));
    CHECK_FALSE(ring_isomorphic(zn(4), product({2, 2})));
    // CRT: Z6 = Z2 x Z3
    CHECK(ring_isomorphic(zn(6), product({2, 3})));
    CHECK_FALSE(ring_isomorphic(zn(8), product({2, 4})));
    // agreement with the permutation oracle on small rings
    for (int n : {2, 3, 4, 6}) {
        CHECK(ring_isomorphic(zn(n), zn(n)) == iso_oracle(zn(n), zn(n)));
    }
    CHECK(iso_oracle(zn(6), product({2, 3})));
    CHECK_THROWS_AS(ring_isomorphic(zn(60), build_ring(RingSpec::product(
                        {RingSpec::zn(4), RingSpec::zn(15)}))), OrderTooLarge);
}

TEST_CASE("axiom self-check accepts every construction kind") {
    CHECK_NOTHROW(check_ring_axioms(zn(24)));
    CHECK_NOTHROW(check_ring_axioms(product({4, 6})));
    CHECK_NOTHROW(check_ring_axioms(build_ring(RingSpec::quotient(RingSpec::zn(16), {4}))));
    CHECK_NOTHROW(check_ring_axioms(build_ring(RingSpec::localization(RingSpec::zn(12), {4}))));
    FiniteRing B = zn(3);
    CHECK_NOTHROW(check_ring_axioms(idealize(B, build_module(B, ModuleSpec::regular()))));
}

TEST_CASE("ring spec JSON round trip") {
    json j = json::parse(R"({"idealize":{"base":{"product":[{"zn":2},{"zn":3}]},"module":{"regular":true}}})");
    RingSpec s = RingSpec::from_json(j);
    CHECK(s.to_json() == j);
    CHECK(RingSpec::from_json(json::parse(R"({"zn":12})")).key() == "{\"zn\":12}");
    CHECK(RingSpec::from_json(json::parse(R"({"localize":{"base":{"zn":12},"s":[4]}})")).to_json()
          == json::parse(R"({"localize":{"base":{"zn":12},"s":[4]}})"));
    CHECK_THROWS_AS(RingSpec::from_json(json::parse(R"({"nope":1})")), MalformedSpec);

    // the canonical key is stable under key order in the input
    json a = json::parse(R"({"quotient":{"gens":[4],"base":{"zn":12}}})");
    json b = json::parse(R"({"quotient":{"base":{"zn":12},"gens":[4]}})");
    CHECK(RingSpec::from_json(a).key() == RingSpec::from_json(b).key());
}

TEST_CASE("mixed radix grouping is associative") {
    // flat index of a 3-factor product equals the nested (left, right) index
    FiniteRing R = product({2, 3, 4});
    FiniteRing right = product({3, 4});
    for (int x = 0; x < R.order(); ++x) {
        std::vector<int> c = R.product_decode(x);
        int left = c[0];
        int r = right.product_encode(std::vector<int>{c[1], c[2]});
        CHECK(x == left * right.order() + r);
    }
}
