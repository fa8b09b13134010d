#include "absorblab/corpus.hpp"

#include <set>

#include "absorblab/ideal.hpp"

namespace absorblab {

CorpusSpec CorpusSpec::from_json(const json& j) {
    CorpusSpec s;
    if (j.contains("zn_max")) s.zn_max = j.at("zn_max").get<int>();
    if (j.contains("product_min_factors")) s.product_min_factors = j.at("product_min_factors").get<int>();
    if (j.contains("product_max_factors")) s.product_max_factors = j.at("product_max_factors").get<int>();
    if (j.contains("product_zn_max")) s.product_zn_max = j.at("product_zn_max").get<int>();
    if (j.contains("product_order_cap")) s.product_order_cap = j.at("product_order_cap").get<int>();
    if (j.contains("include_quotients")) s.include_quotients = j.at("include_quotients").get<bool>();
    if (j.contains("quotient_bases")) s.quotient_bases = j.at("quotient_bases").get<std::vector<int>>();
    if (j.contains("include_idealizations"))
        s.include_idealizations = j.at("include_idealizations").get<bool>();
    if (j.contains("idealization_order_cap"))
        s.idealization_order_cap = j.at("idealization_order_cap").get<int>();
    return s;
}

json CorpusSpec::to_json() const {
    return json{{"zn_max", zn_max},
                {"product_min_factors", product_min_factors},
                {"product_max_factors", product_max_factors},
                {"product_zn_max", product_zn_max},
                {"product_order_cap", product_order_cap},
                {"include_quotients", include_quotients},
                {"quotient_bases", quotient_bases},
                {"include_idealizations", include_idealizations},
                {"idealization_order_cap", idealization_order_cap}};
}

namespace {

void emit_product_tuples(int arity, int zn_max, int order_cap, std::vector<int>& tuple,
                         int min_value, long long order_so_far,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(tuple.size()) == arity) {
        out.push_back(tuple);
        return;
    }
    for (int n = min_value; n <= zn_max; ++n) {
        long long next = order_so_far * n;
        if (next > order_cap) break;
        tuple.push_back(n);
        emit_product_tuples(arity, zn_max, order_cap, tuple, n, next, out);
        tuple.pop_back();
    }
}

}  // namespace

std::vector<FiniteRing> build_corpus(const CorpusSpec& spec, int global_order_bound) {
    if (spec.zn_max < 0 || spec.product_order_cap <= 0 || spec.idealization_order_cap <= 0 ||
        spec.product_zn_max < 2 || spec.product_min_factors < 1)
        throw CapExceeded("corpus caps must be positive");
    if (spec.zn_max > global_order_bound || spec.product_order_cap > global_order_bound ||
        spec.idealization_order_cap > global_order_bound)
        throw CapExceeded("corpus caps exceed the global order bound");

    BuildOptions opts;
    opts.self_check_bound = std::min(64, global_order_bound);

    std::vector<FiniteRing> out;
    std::set<std::string> seen;
    auto push = [&](const RingSpec& rs) {
        if (!seen.insert(rs.key()).second) return;
        out.push_back(build_ring(rs, opts));
    };

    // Cyclic rings.
    for (int n = 2; n <= spec.zn_max; ++n) push(RingSpec::zn(n));

    // Products of cyclic rings, non-decreasing factor tuples in lex order.
    std::vector<RingSpec> product_specs;
    for (int arity = std::max(2, spec.product_min_factors); arity <= spec.product_max_factors;
         ++arity) {
        std::vector<std::vector<int>> tuples;
        std::vector<int> tuple;
        emit_product_tuples(arity, spec.product_zn_max, spec.product_order_cap, tuple, 2, 1,
                            tuples);
        for (const auto& t : tuples) {
            std::vector<RingSpec> factors;
            for (int n : t) factors.push_back(RingSpec::zn(n));
            product_specs.push_back(RingSpec::product(std::move(factors)));
            push(product_specs.back());
        }
    }

    // Quotients of the named cyclic bases by each nonzero proper ideal (d).
    if (spec.include_quotients) {
        for (int n : spec.quotient_bases) {
            if (n < 2 || n > spec.zn_max) continue;
            for (int d = 2; d < n; ++d) {
                if (n % d != 0) continue;
                push(RingSpec::quotient(RingSpec::zn(n), {d}));
            }
        }
    }

    // Idealizations B x M over small bases: the regular module, quotients of
    // it by each nonzero proper ideal, and one two-fold direct sum.
    if (spec.include_idealizations) {
        std::vector<RingSpec> bases;
        for (int n = 2; n <= spec.zn_max && n <= spec.idealization_order_cap / 2; ++n)
            bases.push_back(RingSpec::zn(n));
        for (const auto& p : product_specs) {
            FiniteRing r = build_ring(p, opts);
            if (r.order() <= spec.idealization_order_cap / 2) bases.push_back(p);
        }
        for (const auto& base_spec : bases) {
            FiniteRing base = build_ring(base_spec, opts);
            long long b = base.order();
            if (b * b <= spec.idealization_order_cap)
                push(RingSpec::idealization(base_spec, ModuleSpec::regular()));
            for (const Ideal& N : enumerate_ideals(base, global_order_bound)) {
                if (N.is_zero() || !N.proper(base)) continue;
                long long m = b / static_cast<long long>(N.size());
                if (b * m <= spec.idealization_order_cap)
                    push(RingSpec::idealization(base_spec, ModuleSpec::quotient(N.elements())));
            }
            if (b * b * b <= spec.idealization_order_cap)
                push(RingSpec::idealization(
                    base_spec, ModuleSpec::direct_sum({ModuleSpec::regular(), ModuleSpec::regular()})));
        }
    }

    for (const FiniteRing& r : out) {
        if (r.order() > global_order_bound)
            throw CapExceeded("generated ring exceeds the global order bound");
    }
    return out;
}

}  // namespace absorblab
