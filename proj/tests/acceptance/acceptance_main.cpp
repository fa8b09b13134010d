// Acceptance gate: runs every release criterion at desk scale and prints one
// pass/fail line per criterion. Exit code 0 only when all criteria hold.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "absorblab/cache.hpp"
#include "absorblab/report.hpp"
#include "absorblab/search.hpp"
#include "absorblab/theorems.hpp"

using namespace absorblab;

namespace {

struct Gate {
    int failures = 0;

    void run(int id, const std::string& name, const std::function<bool(std::string&)>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = fn(note);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << id << ": "
                  << name << " (" << std::fixed << std::setprecision(1) << secs << "s)";
        if (!note.empty()) std::cout << "  -- " << note;
        std::cout << "\n" << std::flush;
        if (!ok) ++failures;
    }
};

bool squarefree(int n) {
    for (int p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

int divisor_count(int n) {
    int c = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

std::vector<Bitset> subset_filter_ideals(const FiniteRing& R) {
    int n = R.order();
    std::vector<Bitset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Bitset b(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) b.set(static_cast<std::size_t>(i));
        if (is_ideal_set(R, b)) out.push_back(b);
    }
    return out;
}

Bitset full_bits(int n) {
    Bitset b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b.set(static_cast<std::size_t>(i));
    return b;
}

std::string fmt_count(std::int64_t n, const char* what) {
    std::ostringstream os;
    os << n << " " << what;
    return os.str();
}

}  // namespace

int main() {
    Gate gate;
    std::vector<FiniteRing> corpus = build_corpus(CorpusSpec::defaults());
    std::cout << "default corpus: " << corpus.size() << " rings\n";

    // ------------------------------------------------------------------ 1
    gate.run(1, "ring axioms hold on every corpus ring", [&](std::string& note) {
        auto t0 = std::chrono::steady_clock::now();
        for (const FiniteRing& R : corpus) check_ring_axioms(R);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        note = fmt_count(static_cast<std::int64_t>(corpus.size()), "rings");
        return secs < 60.0;
    });

    // ------------------------------------------------------------------ 2
    gate.run(2, "ideal enumeration equals the 2^|R| filter; Zn has d(n) ideals",
             [&](std::string& note) {
        std::int64_t filtered = 0;
        for (const FiniteRing& R : corpus) {
            if (R.order() > 16) continue;
            ++filtered;
            std::vector<Bitset> oracle = subset_filter_ideals(R);
            std::vector<Ideal> got = enumerate_ideals(R);
            if (got.size() != oracle.size()) return false;
            std::set<Bitset> oracle_set(oracle.begin(), oracle.end());
            for (const Ideal& I : got)
                if (!oracle_set.count(I.members())) return false;
        }
        for (int n = 2; n <= 24; ++n) {
            FiniteRing R = build_ring(RingSpec::zn(n));
            if (static_cast<int>(enumerate_ideals(R).size()) != divisor_count(n)) return false;
        }
        note = fmt_count(filtered, "rings subset-filtered");
        return filtered > 0;
    });

    // ------------------------------------------------------------------ 3
    gate.run(3, "radical identities, including rad(IxN) = rad(I)xM", [&](std::string& note) {
        std::int64_t homogeneous = 0;
        for (const FiniteRing& R : corpus) {
            std::vector<Ideal> lat = enumerate_ideals(R);
            std::map<Bitset, Bitset> rad;
            for (const Ideal& I : lat) rad[I.members()] = radical(R, I).members();
            for (const Ideal& I : lat) {
                const Bitset& r = rad.at(I.members());
                if (!I.members().subset_of(r)) return false;
                if (radical(R, Ideal(R, r)).members() != r) return false;
                for (const Ideal& J : lat) {
                    Bitset inter = I.members() & J.members();
                    if (radical(R, Ideal(R, inter)).members() != (r & rad.at(J.members())))
                        return false;
                }
            }
            if (R.spec().kind != RingSpec::Kind::Idealization) continue;

            const FiniteRing& B = R.idealization_base();
            const FiniteModule& M = R.idealization_module();
            int mo = M.order();
            std::vector<Bitset> submodules = enumerate_submodules(M);
            for (const Ideal& I : enumerate_ideals(B)) {
                Bitset radI = radical(B, I).members();
                // rad(I) x M inside the idealization
                Bitset expect(static_cast<std::size_t>(R.order()));
                radI.for_each([&](int r) {
                    for (int m = 0; m < mo; ++m) expect.set(static_cast<std::size_t>(r * mo + m));
                });
                for (const Bitset& N : submodules) {
                    bool im_in_n = true;
                    for (int x : I.elements())
                        for (int m = 0; m < mo && im_in_n; ++m)
                            if (!N.test(static_cast<std::size_t>(M.scalar(x, m)))) im_in_n = false;
                    if (!im_in_n) continue;  // I x N is homogeneous only when IM lies in N
                    ++homogeneous;
                    Bitset ixn(static_cast<std::size_t>(R.order()));
                    I.members().for_each([&](int r) {
                        N.for_each([&](int m) { ixn.set(static_cast<std::size_t>(r * mo + m)); });
                    });
                    if (!is_ideal_set(R, ixn)) return false;
                    if (radical(R, Ideal(R, ixn)).members() != expect) return false;
                }
            }
        }
        note = fmt_count(homogeneous, "homogeneous ideals");
        return homogeneous > 0;
    });

    // ------------------------------------------------------------------ 4
    gate.run(4, "elementwise phi_empty-2AQP agrees with the radical route", [&](std::string& note) {
        std::int64_t pairs = 0;
        for (const FiniteRing& R : corpus) {
            for (const Ideal& I : enumerate_ideals(R)) {
                if (!I.proper(R)) continue;
                ++pairs;
                bool a = is_phi_2aqp(R, I, PhiSpec::empty(), TwoAqpRoute::Elementwise).holds;
                bool b = is_phi_2aqp(R, I, PhiSpec::empty(), TwoAqpRoute::Radical).holds;
                if (a != b) return false;
            }
        }
        note = fmt_count(pairs, "(ring, ideal) pairs");
        return pairs > 0;
    });

    // ------------------------------------------------------------------ 5
    gate.run(5, "hierarchy suite: T-PP and T-T2 clean; strictness witnesses pinned",
             [&](std::string& note) {
        VerifyOptions opts;
        opts.n_max = 4;
        std::vector<VerificationReport> reps = verify_many({"T-PP", "T-T2"}, corpus, opts);
        if (!reps[0].verified() || !reps[1].verified()) return false;

        auto in_corpus = [&](const RingSpec& spec) {
            for (const FiniteRing& R : corpus)
                if (R.key() == spec.key()) return true;
            return false;
        };

        FiniteRing z12 = build_ring(RingSpec::zn(12));
        FiniteRing z222 = build_ring(
            RingSpec::product({RingSpec::zn(2), RingSpec::zn(2), RingSpec::zn(2)}));
        if (!in_corpus(z12.spec()) || !in_corpus(z222.spec())) return false;

        Ideal i4 = span(z12, std::vector<int>{4});
        Ideal i6 = span(z12, std::vector<int>{6});
        Ideal zz = zero_ideal(z222);

        json computed;
        computed["quasi-primary-not-prime"] = {
            {"ring", json::parse(z12.key())},
            {"ideal", i4.elements()},
            {"satisfied",
             {{"quasi_primary@phi_empty", is_phi_quasi_primary(z12, i4, PhiSpec::empty()).holds},
              {"prime@phi_empty", is_phi_prime(z12, i4, PhiSpec::empty()).holds}}}};
        computed["2aqp-not-quasi-primary"] = {
            {"ring", json::parse(z12.key())},
            {"ideal", i6.elements()},
            {"satisfied",
             {{"two_absorbing_quasi_primary@phi_empty",
               is_phi_2aqp(z12, i6, PhiSpec::empty()).holds},
              {"quasi_primary@phi_empty", is_phi_quasi_primary(z12, i6, PhiSpec::empty()).holds}}}};
        computed["weakly-2aqp-not-2aqp"] = {
            {"ring", json::parse(z222.key())},
            {"ideal", zz.elements()},
            {"satisfied",
             {{"two_absorbing_quasi_primary@phi_0", is_phi_2aqp(z222, zz, PhiSpec::zero()).holds},
              {"two_absorbing_quasi_primary@phi_empty",
               is_phi_2aqp(z222, zz, PhiSpec::empty()).holds}}}};

        // the witnesses must actually witness strictness
        if (!computed["quasi-primary-not-prime"]["satisfied"]["quasi_primary@phi_empty"].get<bool>() ||
            computed["quasi-primary-not-prime"]["satisfied"]["prime@phi_empty"].get<bool>())
            return false;
        if (!computed["2aqp-not-quasi-primary"]["satisfied"]["two_absorbing_quasi_primary@phi_empty"].get<bool>() ||
            computed["2aqp-not-quasi-primary"]["satisfied"]["quasi_primary@phi_empty"].get<bool>())
            return false;
        if (!computed["weakly-2aqp-not-2aqp"]["satisfied"]["two_absorbing_quasi_primary@phi_0"].get<bool>() ||
            computed["weakly-2aqp-not-2aqp"]["satisfied"]["two_absorbing_quasi_primary@phi_empty"].get<bool>())
            return false;

        std::ifstream in(std::string(ABSORBLAB_GOLDEN_DIR) + "/hierarchy_witnesses.json");
        if (!in) {
            note = "golden file missing";
            return false;
        }
        json golden;
        in >> golden;
        if (golden != computed) {
            note = "golden mismatch";
            return false;
        }
        note = "checked=" + std::to_string(reps[0].instances_checked + reps[1].instances_checked);
        return true;
    });

    // ------------------------------------------------------------------ 6
    gate.run(6, "structure theorems verified with non-vacuous instances", [&](std::string& note) {
        VerifyOptions opts;
        opts.n_max = 4;
        std::vector<std::string> ids = {"T-PC",  "T-COR2", "T-TTC", "T-EQUIV",
                                        "T-WQP", "T-METHOD", "T-PQ", "T-PQ2"};
        std::vector<VerificationReport> reps = verify_many(ids, corpus, opts);
        for (const auto& r : reps) {
            if (!r.verified() || r.non_vacuous() < 1) {
                note = r.theorem_id + (r.verified() ? " vacuous" : " violated");
                return false;
            }
        }

        // T-PC's flagged set must be exactly the weakly-2AQP-not-2AQP ideals,
        // each with I^3 = 0 and rad(I) = rad(0) exactly.
        std::set<std::string> direct;
        for (const FiniteRing& R : corpus) {
            for (const Ideal& I : enumerate_ideals(R)) {
                if (!I.proper(R)) continue;
                if (is_phi_2aqp(R, I, PhiSpec::zero()).holds &&
                    !is_phi_2aqp(R, I, PhiSpec::empty()).holds) {
                    direct.insert(R.key() + "#" + json(I.elements()).dump());
                    if (power(R, I, 3).members() != zero_ideal(R).members()) return false;
                    if (radical(R, I).members() != radical(R, zero_ideal(R)).members())
                        return false;
                }
            }
        }
        std::set<std::string> flagged;
        for (const json& f : reps[0].flagged)
            flagged.insert(f.at("ring").dump() + "#" + f.at("ideal").dump());
        if (direct != flagged || direct.empty()) {
            note = "witness sets differ";
            return false;
        }
        note = fmt_count(static_cast<std::int64_t>(direct.size()), "witness ideals");
        return true;
    });

    // ------------------------------------------------------------------ 7
    gate.run(7, "Nakayama suite over every corpus ring and module", [&](std::string& note) {
        VerificationReport rep = verify("T-NAK", corpus);
        note = "modules=" + std::to_string(rep.details.count("modules") ? rep.details.at("modules") : 0) +
               " non_vacuous=" + std::to_string(rep.non_vacuous());
        return rep.verified() && rep.non_vacuous() > 0;
    });

    // ------------------------------------------------------------------ 8
    gate.run(8, "localization suite and S^-1 Z12 at {4} = Z3", [&](std::string& note) {
        VerificationReport rep = verify("T-QUO", corpus);
        if (!rep.verified() || rep.non_vacuous() < 1) return false;

        FiniteRing z12 = build_ring(RingSpec::zn(12));
        auto [loc, hom] = localize(z12, {4});
        (void)hom;
        if (!ring_isomorphic(loc, build_ring(RingSpec::zn(3)))) return false;
        note = "S sets=" + std::to_string(rep.details.at("multiplicative_sets")) +
               " checked=" + std::to_string(rep.instances_checked);
        return true;
    });

    // ------------------------------------------------------------------ 9
    gate.run(9, "idealization biconditional with a triple-zero instance", [&](std::string& note) {
        VerificationReport rep = verify("T-IDEALZ", corpus);
        if (!rep.verified()) return false;
        std::int64_t tz = rep.details.count("triple_zero_instances")
                              ? rep.details.at("triple_zero_instances")
                              : 0;
        note = "non_vacuous=" + std::to_string(rep.non_vacuous()) +
               " triple_zero_instances=" + std::to_string(tz);
        return rep.non_vacuous() > 0 && tz > 0;
    });

    // ----------------------------------------------------------------- 10
    gate.run(10, "von Neumann suite", [&](std::string& note) {
        auto t0 = std::chrono::steady_clock::now();

        FiniteRing good = build_ring(
            RingSpec::product({RingSpec::zn(2), RingSpec::zn(3), RingSpec::zn(5)}));
        for (const Ideal& J : enumerate_ideals(good)) {
            if (!J.proper(good)) continue;
            if (!is_phi_2aqp(good, J, PhiSpec::power(2)).holds) return false;
        }

        FiniteRing bad = build_ring(
            RingSpec::product({RingSpec::zn(4), RingSpec::zn(2), RingSpec::zn(2)}));
        int gen = bad.product_encode(std::vector<int>{2, 0, 0});
        Ideal I = span(bad, std::span<const int>(&gen, 1));
        PredicateOutcome out = is_phi_2aqp(bad, I, PhiSpec::power(2));
        if (out.holds) return false;
        std::set<int> witness(out.witness.begin(), out.witness.end());
        std::set<int> expected = {bad.product_encode(std::vector<int>{2, 1, 1}),
                                  bad.product_encode(std::vector<int>{1, 0, 1}),
                                  bad.product_encode(std::vector<int>{1, 1, 0})};
        if (witness != expected) {
            note = "unexpected witness triple";
            return false;
        }

        for (int n = 2; n <= 100; ++n) {
            FiniteRing R = build_ring(RingSpec::zn(n));
            if (is_von_neumann_regular(R) != squarefree(n)) return false;
        }

        VerificationReport rep = verify("T-VNR", corpus);
        if (!rep.verified() || rep.non_vacuous() < 1) return false;

        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        note = "products_in_scope=" + std::to_string(rep.details.at("products_in_scope"));
        return secs < 120.0;
    });

    // ----------------------------------------------------------------- 11
    gate.run(11, "product-theorem suite over pairs <= 9 and triples <= 48",
             [&](std::string& note) {
        CorpusSpec pairs;
        pairs.zn_max = 0;
        pairs.product_min_factors = 2;
        pairs.product_max_factors = 2;
        pairs.product_zn_max = 9;
        pairs.product_order_cap = 81;
        pairs.include_quotients = false;
        pairs.include_idealizations = false;

        CorpusSpec triples = pairs;
        triples.product_min_factors = 3;
        triples.product_max_factors = 3;
        triples.product_order_cap = 48;

        std::vector<FiniteRing> product_corpus = build_corpus(pairs, 81);
        for (FiniteRing& r : build_corpus(triples, 81)) product_corpus.push_back(std::move(r));

        VerifyOptions opts;
        opts.n_max = 3;
        opts.order_cap = 81;
        std::vector<std::string> ids = {"T-TSI",   "T-PRODN", "T-CAR",  "T-CAR2", "T-WEAK1",
                                        "T-WEAK2", "T-WEAK3", "T-CAR3", "T-CAR4"};
        std::vector<VerificationReport> reps = verify_many(ids, product_corpus, opts);
        std::ostringstream os;
        for (const auto& r : reps) {
            if (!r.verified()) {
                note = r.theorem_id + " violated";
                return false;
            }
            os << r.theorem_id << " vacuous=" << r.vacuous_instances << " ";
        }
        note = os.str() + "(" + std::to_string(product_corpus.size()) + " rings)";
        return true;
    });

    // ----------------------------------------------------------------- 12
    gate.run(12, "verify --all is byte-deterministic", [&](std::string& note) {
        VerifyOptions opts;
        auto run_all = [&](std::vector<VerificationReport>& reps) {
            std::vector<FiniteRing> fresh = build_corpus(CorpusSpec::defaults());
            reps = verify_many(all_theorem_ids(), fresh, opts);
            std::string out;
            for (const VerificationReport& r : reps) out += r.to_json().dump(2) + "\n";
            return out;
        };
        std::vector<VerificationReport> first_reps, second_reps;
        std::string first = run_all(first_reps);
        std::string second = run_all(second_reps);
        if (first != second) return false;

        // every theorem must also be clean on the default corpus
        std::int64_t all_vacuous = 0;
        for (const auto& r : first_reps) {
            if (!r.verified()) {
                note = r.theorem_id + " violated";
                return false;
            }
            if (r.non_vacuous() == 0) ++all_vacuous;
        }
        note = std::to_string(first_reps.size()) + " reports, " + std::to_string(all_vacuous) +
               " all-vacuous (documented)";
        return true;
    });

    std::cout << (gate.failures == 0 ? "ACCEPTANCE: all criteria passed"
                                     : "ACCEPTANCE: " + std::to_string(gate.failures) +
                                           " criterion(s) failed")
              << "\n";
    return gate.failures == 0 ? 0 : 1;
}
