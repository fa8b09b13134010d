#include "absorblab/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>
#include <tuple>

#include "absorblab/ideal.hpp"

namespace absorblab {

namespace {

// ---------------------------------------------------------------------------
// Per-ring computation context with memoized lattice, radicals and predicates
// ---------------------------------------------------------------------------

struct RingCtx {
    FiniteRing R;
    int bound;

    RingCtx(FiniteRing r, int b) : R(std::move(r)), bound(b) {}

    const std::vector<Ideal>& ideals() {
        if (!lattice_built_) {
            lattice_ = enumerate_ideals(R, bound);
            lattice_built_ = true;
        }
        return lattice_;
    }

    const Bitset& rad(const Bitset& I) {
        auto it = rad_.find(I);
        if (it == rad_.end()) it = rad_.emplace(I, radical(R, Ideal(R, I)).members()).first;
        return it->second;
    }

    // omega together with the least n for which I^n = I^(n+1).
    const std::pair<Bitset, int>& omega_of(const Bitset& I) {
        auto it = omega_.find(I);
        if (it == omega_.end()) {
            int stab = 0;
            Bitset w = omega(R, Ideal(R, I), &stab).members();
            it = omega_.emplace(I, std::make_pair(std::move(w), stab)).first;
        }
        return it->second;
    }

    Bitset power_of(const Bitset& I, int n) {
        auto it = power_.find({I, n});
        if (it == power_.end())
            it = power_.emplace(std::make_pair(I, n), power(R, Ideal(R, I), n).members()).first;
        return it->second;
    }

    PhiValue phi_at(const PhiSpec& phi, const Bitset& I) {
        auto key = std::make_pair(phi.key(), I);
        auto it = phi_.find(key);
        if (it == phi_.end()) it = phi_.emplace(key, phi_eval(phi, R, Ideal(R, I))).first;
        return it->second;
    }

    PredicateOutcome holds(Property p, const Bitset& I, const PhiValue& phiI) {
        auto key = std::make_tuple(static_cast<int>(p), I, phiI);
        auto it = pred_.find(key);
        if (it == pred_.end()) {
            PredicateOutcome out;
            switch (p) {
                case Property::Prime:
                    out = pred::prime(R, I, phiI);
                    break;
                case Property::TwoAbsorbing:
                    out = pred::two_absorbing(R, I, phiI);
                    break;
                default:
                    out = pred::dispatch(p, R, I, phiI, rad(I));
            }
            it = pred_.emplace(key, std::move(out)).first;
        }
        return it->second;
    }

    const Bitset& zset(const Bitset& I) {
        auto it = zset_.find(I);
        if (it == zset_.end()) it = zset_.emplace(I, z_set(R, Ideal(R, I))).first;
        return it->second;
    }

    // Strongly triple zeros at phi_0 (abc = 0).
    const std::vector<std::array<int, 3>>& triple_zeros(const Bitset& I) {
        auto it = stz_.find(I);
        if (it == stz_.end()) {
            PhiValue zero = Bitset::singleton(static_cast<std::size_t>(R.order()), 0);
            it = stz_.emplace(I, strongly_triple_zeros(R, Ideal(R, I), zero)).first;
        }
        return it->second;
    }

    bool leq(const PhiSpec& a, const PhiSpec& b) {
        auto key = std::make_pair(a.key(), b.key());
        auto it = leq_.find(key);
        if (it == leq_.end()) {
            bool ok = true;
            for (const Ideal& I : ideals()) {
                PhiValue va = phi_at(a, I.members());
                if (!va) continue;
                PhiValue vb = phi_at(b, I.members());
                if (!vb || !va->subset_of(*vb)) {
                    ok = false;
                    break;
                }
            }
            it = leq_.emplace(key, ok).first;
        }
        return it->second;
    }

    const Bitset& jacobson() {
        if (!jac_) jac_ = jacobson_radical(R).members();
        return *jac_;
    }

    bool vnr() {
        if (!vnr_) vnr_ = is_von_neumann_regular(R);
        return *vnr_;
    }

    Bitset full_bits() const {
        Bitset b(static_cast<std::size_t>(R.order()));
        for (int i = 0; i < R.order(); ++i) b.set(static_cast<std::size_t>(i));
        return b;
    }
    Bitset zero_bits() const { return Bitset::singleton(static_cast<std::size_t>(R.order()), 0); }
    PhiValue zero_val() const { return zero_bits(); }

    bool weakly_2aqp(const Bitset& I) {
        return holds(Property::TwoAbsorbingQuasiPrimary, I, zero_val()).holds;
    }
    bool plain_2aqp(const Bitset& I) {
        return holds(Property::TwoAbsorbingQuasiPrimary, I, std::nullopt).holds;
    }
    bool weakly_qp(const Bitset& I) { return holds(Property::QuasiPrimary, I, zero_val()).holds; }
    bool plain_qp(const Bitset& I) { return holds(Property::QuasiPrimary, I, std::nullopt).holds; }

private:
    bool lattice_built_ = false;
    std::vector<Ideal> lattice_;
    std::map<Bitset, Bitset> rad_;
    std::map<Bitset, std::pair<Bitset, int>> omega_;
    std::map<std::pair<Bitset, int>, Bitset> power_;
    std::map<std::pair<std::string, Bitset>, PhiValue> phi_;
    std::map<std::tuple<int, Bitset, PhiValue>, PredicateOutcome> pred_;
    std::map<Bitset, Bitset> zset_;
    std::map<Bitset, std::vector<std::array<int, 3>>> stz_;
    std::map<std::pair<std::string, std::string>, bool> leq_;
    std::optional<Bitset> jac_;
    std::optional<bool> vnr_;
};

struct Workspace {
    explicit Workspace(const VerifyOptions& o)
        : opts(o), ladder(standard_ladder(o.n_max)) {
        build.max_order = 256;
        build.self_check_bound = 16;  // derived rings get a cheap sanity pass
    }

    VerifyOptions opts;
    std::vector<PhiSpec> ladder;
    BuildOptions build;

    RingCtx& ctx_ring(const FiniteRing& r, bool persist) {
        if (auto it = persistent_.find(r.key()); it != persistent_.end()) return *it->second;
        if (auto it = scratch_.find(r.key()); it != scratch_.end()) return *it->second;
        auto& pool = persist ? persistent_ : scratch_;
        auto ctx = std::make_shared<RingCtx>(r, opts.order_cap);
        return *pool.emplace(r.key(), std::move(ctx)).first->second;
    }

    RingCtx& ctx_spec(const RingSpec& s, bool persist) {
        std::string key = s.key();
        if (auto it = persistent_.find(key); it != persistent_.end()) return *it->second;
        if (auto it = scratch_.find(key); it != scratch_.end()) return *it->second;
        auto& pool = persist ? persistent_ : scratch_;
        auto ctx = std::make_shared<RingCtx>(build_ring(s, build), opts.order_cap);
        return *pool.emplace(key, std::move(ctx)).first->second;
    }

    void clear_scratch() { scratch_.clear(); }

private:
    std::map<std::string, std::shared_ptr<RingCtx>> persistent_;
    std::map<std::string, std::shared_ptr<RingCtx>> scratch_;
};

struct Acc {
    std::int64_t checked = 0;
    std::int64_t vacuous = 0;
    std::vector<TheoremViolation> violations;
    std::map<std::string, std::int64_t> details;
    std::vector<json> flagged;
    std::set<std::string> notes;

    void tally(bool non_vacuous) {
        ++checked;
        if (!non_vacuous) ++vacuous;
    }
    void bump(const std::string& k, std::int64_t v = 1) { details[k] += v; }
    void violate(const FiniteRing& R, json inst) {
        violations.push_back({R.key(), std::move(inst)});
    }
};

json ideal_json(const Bitset& bits) { return json(bits.elements()); }

// ---------------------------------------------------------------------------
// Product decomposition helpers
// ---------------------------------------------------------------------------

// One binary grouping R = R1 x R2 of a flat product, in either orientation.
// Theorems stated for two factors run over every contiguous split and, when
// their statement is asymmetric, over the mirrored orientation as well.
struct TwoFactorView {
    RingCtx* whole = nullptr;
    RingCtx* p1 = nullptr;  // plays R1 in the theorem statement
    RingCtx* p2 = nullptr;  // plays R2
    int right_order = 1;    // order of the right slice in the flat index
    bool mirrored = false;  // p1 is the right slice
    int split = 0;

    std::pair<int, int> comps(int x) const {
        int l = x / right_order, r = x % right_order;
        if (mirrored) return {r, l};
        return {l, r};
    }
    int compose(int c1, int c2) const {
        return mirrored ? c2 * right_order + c1 : c1 * right_order + c2;
    }
    std::pair<Bitset, Bitset> project(const Bitset& J) const {
        Bitset b1(static_cast<std::size_t>(p1->R.order()));
        Bitset b2(static_cast<std::size_t>(p2->R.order()));
        J.for_each([&](int x) {
            auto [c1, c2] = comps(x);
            b1.set(static_cast<std::size_t>(c1));
            b2.set(static_cast<std::size_t>(c2));
        });
        return {b1, b2};
    }
    Bitset combine(const Bitset& b1, const Bitset& b2) const {
        Bitset out(static_cast<std::size_t>(whole->R.order()));
        for (int x1 : b1.elements())
            for (int x2 : b2.elements()) out.set(static_cast<std::size_t>(compose(x1, x2)));
        return out;
    }
    // phi = psi1 x psi2 evaluated at J = J1 x J2; empty if either side is.
    PhiValue product_phi(const PhiSpec& psi1, const PhiSpec& psi2, const Bitset& J1,
                         const Bitset& J2) const {
        PhiValue v1 = p1->phi_at(psi1, J1);
        if (!v1) return std::nullopt;
        PhiValue v2 = p2->phi_at(psi2, J2);
        if (!v2) return std::nullopt;
        return combine(*v1, *v2);
    }
};

bool is_flat_product(const FiniteRing& R) {
    return R.spec().kind == RingSpec::Kind::Product && R.spec().factors.size() >= 2;
}

RingSpec slice_spec(const RingSpec& product, std::size_t from, std::size_t to) {
    if (to - from == 1) return product.factors[from];
    std::vector<RingSpec> fs(product.factors.begin() + static_cast<std::ptrdiff_t>(from),
                             product.factors.begin() + static_cast<std::ptrdiff_t>(to));
    return RingSpec::product(std::move(fs));
}

// All binary splits of a flat product; `both_orientations` adds the mirror.
std::vector<TwoFactorView> two_factor_views(Workspace& ws, RingCtx& whole,
                                            bool both_orientations) {
    std::vector<TwoFactorView> views;
    const RingSpec& spec = whole.R.spec();
    if (spec.kind != RingSpec::Kind::Product) return views;
    std::size_t k = spec.factors.size();
    if (k < 2) return views;
    for (std::size_t j = 1; j < k; ++j) {
        RingCtx& left = ws.ctx_spec(slice_spec(spec, 0, j), true);
        RingCtx& right = ws.ctx_spec(slice_spec(spec, j, k), true);
        TwoFactorView v;
        v.whole = &whole;
        v.p1 = &left;
        v.p2 = &right;
        v.right_order = right.R.order();
        v.mirrored = false;
        v.split = static_cast<int>(j);
        views.push_back(v);
        if (both_orientations) {
            TwoFactorView m = v;
            m.p1 = &right;
            m.p2 = &left;
            m.mirrored = true;
            views.push_back(m);
        }
    }
    return views;
}

// Flat decomposition into all top-level factors.
struct FlatProduct {
    RingCtx* whole = nullptr;
    std::vector<RingCtx*> parts;

    std::vector<Bitset> project(const Bitset& J) const {
        std::vector<Bitset> out;
        out.reserve(parts.size());
        for (RingCtx* p : parts) out.emplace_back(static_cast<std::size_t>(p->R.order()));
        J.for_each([&](int x) {
            std::vector<int> comps = whole->R.product_decode(x);
            for (std::size_t i = 0; i < parts.size(); ++i)
                out[i].set(static_cast<std::size_t>(comps[i]));
        });
        return out;
    }
    PhiValue product_phi(const std::vector<const PhiSpec*>& psis,
                         const std::vector<Bitset>& comps) const {
        std::vector<Bitset> values;
        values.reserve(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            PhiValue v = parts[i]->phi_at(*psis[i], comps[i]);
            if (!v) return std::nullopt;
            values.push_back(std::move(*v));
        }
        Bitset out(static_cast<std::size_t>(whole->R.order()));
        std::vector<std::vector<int>> lists;
        lists.reserve(values.size());
        for (const auto& v : values) lists.push_back(v.elements());
        std::vector<std::size_t> cursor(lists.size(), 0);
        std::vector<int> tuple(lists.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < lists.size(); ++i) tuple[i] = lists[i][cursor[i]];
            out.set(static_cast<std::size_t>(whole->R.product_encode(tuple)));
            std::size_t i = lists.size();
            while (i > 0 && ++cursor[i - 1] == lists[i - 1].size()) {
                cursor[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
        return out;
    }
};

FlatProduct flat_product(Workspace& ws, RingCtx& whole) {
    FlatProduct fp;
    fp.whole = &whole;
    const RingSpec& spec = whole.R.spec();
    for (std::size_t i = 0; i < spec.factors.size(); ++i)
        fp.parts.push_back(&ws.ctx_spec(spec.factors[i], true));
    return fp;
}

// ---------------------------------------------------------------------------
// Theorem runners
// ---------------------------------------------------------------------------

void run_t_pp(Workspace& ws, RingCtx& ctx, Acc& acc) {
    const auto& L = ws.ladder;
    for (const Ideal& I : ctx.ideals()) {
        if (!I.proper(ctx.R)) continue;
        const Bitset& bits = I.members();

        // (i)/(iv): psi1 <= psi2 transfers the property upward.
        for (std::size_t i = 0; i < L.size(); ++i) {
            for (std::size_t j = 0; j < L.size(); ++j) {
                if (i == j) continue;
                bool le = ctx.leq(L[i], L[j]);
                PhiValue vi = le ? ctx.phi_at(L[i], bits) : PhiValue{};
                PhiValue vj = le ? ctx.phi_at(L[j], bits) : PhiValue{};
                for (Property p : {Property::QuasiPrimary, Property::TwoAbsorbingQuasiPrimary}) {
                    bool hyp = le && ctx.holds(p, bits, vi).holds;
                    acc.tally(hyp);
                    if (hyp && !ctx.holds(p, bits, vj).holds) {
                        acc.violate(ctx.R, json{{"part", p == Property::QuasiPrimary ? "(i)" : "(iv)"},
                                                {"ideal", ideal_json(bits)},
                                                {"phi1", L[i].name()},
                                                {"phi2", L[j].name()},
                                                {"witness", ctx.holds(p, bits, vj).witness}});
                    }
                }
            }
        }

        // (iii)/(vi): omega-variant iff n-almost variant for every n >= 2.
        int stab = ctx.omega_of(bits).second;
        int n_hi = std::max(2, stab + 1);
        PhiValue om = ctx.phi_at(PhiSpec::omega_phi(), bits);
        for (Property p : {Property::QuasiPrimary, Property::TwoAbsorbingQuasiPrimary}) {
            bool lhs = ctx.holds(p, bits, om).holds;
            bool rhs = true;
            for (int n = 2; n <= n_hi && rhs; ++n)
                rhs = ctx.holds(p, bits, ctx.phi_at(PhiSpec::power(n), bits)).holds;
            acc.tally(lhs || rhs);
            if (lhs != rhs) {
                acc.violate(ctx.R, json{{"part", p == Property::QuasiPrimary ? "(iii)" : "(vi)"},
                                        {"ideal", ideal_json(bits)},
                                        {"omega_variant", lhs},
                                        {"all_n_almost", rhs},
                                        {"stabilization", stab}});
            }
        }
    }
}

void run_t_t1(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (const Ideal& I : ctx.ideals()) {
        if (!I.proper(ctx.R)) continue;
        const Bitset& bits = I.members();
        const Bitset& radI = ctx.rad(bits);
        for (const PhiSpec& phi : ws.ladder) {
            PhiValue phiI = ctx.phi_at(phi, bits);
            PhiValue phiRad = ctx.phi_at(phi, radI);

            bool cond_eq;  // phi(rad I) = rad(phi(I)), both sides empty counts
            if (!phiRad && !phiI) cond_eq = true;
            else if (phiRad && phiI) cond_eq = (*phiRad == ctx.rad(*phiI));
            else cond_eq = false;
            bool cond_sub = !phiRad || (phiI && phiRad->subset_of(*phiI));

            bool taqp = ctx.holds(Property::TwoAbsorbingQuasiPrimary, bits, phiI).holds;
            bool qp = ctx.holds(Property::QuasiPrimary, bits, phiI).holds;
            bool rad_2abs = ctx.holds(Property::TwoAbsorbing, radI, phiRad).holds;
            bool rad_prime = ctx.holds(Property::Prime, radI, phiRad).holds;

            // (i) under rad I = I the two notions coincide.
            bool gate_i = (radI == bits);
            bool tabs = gate_i && ctx.holds(Property::TwoAbsorbing, bits, phiI).holds;
            acc.tally(gate_i && (taqp || tabs));
            if (gate_i && taqp != tabs)
                acc.violate(ctx.R, json{{"part", "(i)"}, {"ideal", ideal_json(bits)},
                                        {"phi", phi.name()}, {"2aqp", taqp}, {"2absorbing", tabs}});

            struct Step { const char* part; bool hyp; bool concl; };
            for (const Step& s : {Step{"(ii)", taqp && cond_eq, rad_2abs},
                                  Step{"(iii)", rad_2abs && cond_sub, taqp},
                                  Step{"(iv)", qp && cond_eq, rad_prime},
                                  Step{"(v)", rad_prime && cond_sub, qp}}) {
                acc.tally(s.hyp);
                if (s.hyp && !s.concl)
                    acc.violate(ctx.R, json{{"part", s.part}, {"ideal", ideal_json(bits)},
                                            {"phi", phi.name()}});
            }
        }
    }
}

void run_t_t2(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (const Ideal& I : ctx.ideals()) {
        if (!I.proper(ctx.R)) continue;
        const Bitset& bits = I.members();
        for (const PhiSpec& phi : ws.ladder) {
            PhiValue phiI = ctx.phi_at(phi, bits);
            bool qp = ctx.holds(Property::QuasiPrimary, bits, phiI).holds;
            bool tap = ctx.holds(Property::TwoAbsorbingPrimary, bits, phiI).holds;
            bool taqp = ctx.holds(Property::TwoAbsorbingQuasiPrimary, bits, phiI).holds;
            struct Step { const char* part; bool hyp; bool concl; };
            for (const Step& s :
                 {Step{"(i)", qp, tap}, Step{"(ii)", tap, taqp}, Step{"(iii)", qp, taqp}}) {
                acc.tally(s.hyp);
                if (s.hyp && !s.concl)
                    acc.violate(ctx.R, json{{"part", s.part}, {"ideal", ideal_json(bits)},
                                            {"phi", phi.name()}});
            }
        }
    }
}

// Shared by T-PQ and T-PQ2: quotient transfer of the (2-absorbing) quasi
// primary predicates through R -> R/phi(I).
void run_quotient_transfer(Workspace& ws, RingCtx& ctx, Acc& acc, bool phi_on_source) {
    for (const Ideal& I : ctx.ideals()) {
        if (!I.proper(ctx.R)) continue;
        const Bitset& bits = I.members();
        for (const PhiSpec& phi : ws.ladder) {
            PhiValue phiI = ctx.phi_at(phi, bits);
            if (!phiI) {
                acc.tally(false);
                acc.tally(false);
                continue;
            }
            RingCtx& q = ws.ctx_spec(RingSpec::quotient(ctx.R.spec(), phiI->elements()), false);
            const std::vector<int>& proj = q.R.quotient_projection();
            Bitset image(static_cast<std::size_t>(q.R.order()));
            bits.for_each([&](int x) { image.set(static_cast<std::size_t>(proj[static_cast<std::size_t>(x)])); });

            for (Property p : {Property::QuasiPrimary, Property::TwoAbsorbingQuasiPrimary}) {
                bool lhs, rhs;
                if (phi_on_source) {
                    // T-PQ: I is phi-P in R  iff  I/phi(I) is weakly P in R/phi(I).
                    lhs = ctx.holds(p, bits, phiI).holds;
                    rhs = q.holds(p, image, q.zero_val()).holds;
                } else {
                    // T-PQ2: I is P in R  iff  I/phi(I) is P in R/phi(I).
                    lhs = ctx.holds(p, bits, std::nullopt).holds;
                    rhs = q.holds(p, image, std::nullopt).holds;
                }
                acc.tally(lhs || rhs);
                if (lhs != rhs)
                    acc.violate(ctx.R,
                                json{{"part", p == Property::QuasiPrimary ? "(i)" : "(ii)"},
                                     {"ideal", ideal_json(bits)},
                                     {"phi", phi.name()},
                                     {"source", lhs},
                                     {"quotient", rhs}});
            }
        }
    }
}

void run_t_method(Workspace& ws, RingCtx& ctx, Acc& acc) {
    const auto& lat = ctx.ideals();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (!lat[i].proper(ctx.R)) continue;
        for (std::size_t j = i; j < lat.size(); ++j) {
            if (!lat[j].proper(ctx.R)) continue;
            const Bitset& p1 = lat[i].members();
            const Bitset& p2 = lat[j].members();
            Bitset inter = p1 & p2;
            Bitset prod = ideal_op(ctx.R, IdealOp::Product, lat[i], lat[j]).members();
            for (const PhiSpec& phi : ws.ladder) {
                PhiValue v1 = ctx.phi_at(phi, p1);
                PhiValue v2 = ctx.phi_at(phi, p2);
                bool both_qp = ctx.holds(Property::QuasiPrimary, p1, v1).holds &&
                               ctx.holds(Property::QuasiPrimary, p2, v2).holds;
                struct Case { const char* part; const Bitset* target; };
                for (const Case& c : {Case{"(i)", &inter}, Case{"(ii)", &prod}}) {
                    PhiValue vt = ctx.phi_at(phi, *c.target);
                    bool hyp = both_qp && v1 == v2 && v2 == vt;
                    acc.tally(hyp);
                    if (hyp && !ctx.holds(Property::TwoAbsorbingQuasiPrimary, *c.target, vt).holds)
                        acc.violate(ctx.R, json{{"part", c.part},
                                                {"P1", ideal_json(p1)},
                                                {"P2", ideal_json(p2)},
                                                {"phi", phi.name()},
                                                {"target", ideal_json(*c.target)}});
                }
            }
        }
    }
}

void run_t_pc(Workspace& ws, RingCtx& ctx, Acc& acc, bool cor2_only) {
    (void)ws;
    for (const Ideal& I : ctx.ideals()) {
        if (!I.proper(ctx.R)) continue;
        const Bitset& bits = I.members();
        bool hyp = ctx.weakly_2aqp(bits) && !ctx.plain_2aqp(bits);
        acc.tally(hyp);
        if (!hyp) continue;
        if (!cor2_only) {
            acc.flagged.push_back(json{{"ring", json::parse(ctx.R.key())}, {"ideal", ideal_json(bits)}});
            acc.bump("hypothesis_instances");
            Bitset cube = ctx.power_of(bits, 3);
            if (cube != ctx.zero_bits())
                acc.violate(ctx.R, json{{"part", "I^3=0"}, {"ideal", ideal_json(bits)},
                                        {"cube", ideal_json(cube)}});
        }
        if (ctx.rad(bits) != ctx.rad(ctx.zero_bits()))
            acc.violate(ctx.R, json{{"part", "rad(I)=rad(0)"}, {"ideal", ideal_json(bits)}});
    }
}

void run_t_ttc(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (const Ideal& I : ctx.ideals()) {
        if (!I.proper(ctx.R)) continue;
        const Bitset& bits = I.members();
        Bitset cube = ctx.power_of(bits, 3);
        for (const PhiSpec& phi : ws.ladder) {
            PhiValue phiI = ctx.phi_at(phi, bits);
            bool phi_taqp = ctx.holds(Property::TwoAbsorbingQuasiPrimary, bits, phiI).holds;
            bool taqp = ctx.plain_2aqp(bits);

            bool hyp_i = phi_taqp;
            bool concl_i = taqp || (phiI && cube.subset_of(*phiI));
            acc.tally(hyp_i);
            if (hyp_i && !concl_i)
                acc.violate(ctx.R, json{{"part", "(i)"}, {"ideal", ideal_json(bits)},
                                        {"phi", phi.name()}});

            bool hyp_ii = phi_taqp && !taqp && phiI.has_value();
            acc.tally(hyp_ii);
            if (hyp_ii && ctx.rad(bits) != ctx.rad(*phiI))
                acc.violate(ctx.R, json{{"part", "(ii)"}, {"ideal", ideal_json(bits)},
                                        {"phi", phi.name()}});
        }
    }
}

void run_t_equiv(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (const Ideal& I : ctx.ideals()) {
        if (!I.proper(ctx.R)) continue;
        const Bitset& bits = I.members();
        for (const PhiSpec& phi : ws.ladder) {
            PhiValue phiI = ctx.phi_at(phi, bits);
            bool gate = phiI && ctx.holds(Property::QuasiPrimary, *phiI, std::nullopt).holds;
            bool lhs = gate && ctx.holds(Property::TwoAbsorbingQuasiPrimary, bits, phiI).holds;
            bool rhs = gate && ctx.plain_2aqp(bits);
            acc.tally(gate && (lhs || rhs));
            if (gate && lhs != rhs)
                acc.violate(ctx.R, json{{"ideal", ideal_json(bits)}, {"phi", phi.name()},
                                        {"phi_2aqp", lhs}, {"plain_2aqp", rhs}});
        }
    }
}

void run_t_wqp(Workspace& ws, RingCtx& ctx, Acc& acc) {
    PhiSpec phi3 = PhiSpec::power(3);
    for (const Ideal& I : ctx.ideals()) {
        if (!I.proper(ctx.R)) continue;
        const Bitset& bits = I.members();
        bool qp = ctx.plain_qp(bits);

        // (i) weakly quasi primary, not quasi primary => P^2 = 0.
        bool hyp_i = ctx.weakly_qp(bits) && !qp;
        acc.tally(hyp_i);
        if (hyp_i && ctx.power_of(bits, 2) != ctx.zero_bits())
            acc.violate(ctx.R, json{{"part", "(i)"}, {"ideal", ideal_json(bits)}});

        for (const PhiSpec& phi : ws.ladder) {
            PhiValue phiI = ctx.phi_at(phi, bits);
            bool phi_qp = ctx.holds(Property::QuasiPrimary, bits, phiI).holds;

            // (ii) phi-quasi primary, not quasi primary => P^2 inside phi(P).
            bool hyp_ii = phi_qp && !qp;
            acc.tally(hyp_ii);
            if (hyp_ii && !(phiI && ctx.power_of(bits, 2).subset_of(*phiI)))
                acc.violate(ctx.R, json{{"part", "(ii)"}, {"ideal", ideal_json(bits)},
                                        {"phi", phi.name()}});

            // (iii) phi <= phi_3 makes phi-quasi primary n-almost for all n.
            bool hyp_iii = ctx.leq(phi, phi3) && phi_qp;
            acc.tally(hyp_iii);
            if (hyp_iii) {
                int stab = ctx.omega_of(bits).second;
                bool concl = ctx.holds(Property::QuasiPrimary, bits,
                                       ctx.phi_at(PhiSpec::omega_phi(), bits))
                                 .holds;
                for (int n = 2; n <= std::max(2, stab + 1) && concl; ++n)
                    concl = ctx.holds(Property::QuasiPrimary, bits,
                                      ctx.phi_at(PhiSpec::power(n), bits))
                                .holds;
                if (!concl)
                    acc.violate(ctx.R, json{{"part", "(iii)"}, {"ideal", ideal_json(bits)},
                                            {"phi", phi.name()}});
            }
        }
    }
}

void run_t_nak(Workspace& ws, RingCtx& ctx, Acc& acc) {
    constexpr int kModuleCap = 16;

    std::vector<FiniteModule> modules;
    if (ctx.R.order() <= kModuleCap)
        modules.push_back(build_module(ctx.R, ModuleSpec::regular(), ws.build));
    for (const Ideal& N : ctx.ideals()) {
        if (N.is_zero() || !N.proper(ctx.R)) continue;
        int mo = ctx.R.order() / static_cast<int>(N.size());
        if (mo <= kModuleCap)
            modules.push_back(build_module(ctx.R, ModuleSpec::quotient(N.elements()), ws.build));
    }
    if (ctx.R.order() * ctx.R.order() <= kModuleCap)
        modules.push_back(build_module(
            ctx.R, ModuleSpec::direct_sum({ModuleSpec::regular(), ModuleSpec::regular()}), ws.build));
    acc.bump("modules", static_cast<std::int64_t>(modules.size()));

    std::vector<std::vector<Bitset>> submodules;
    submodules.reserve(modules.size());
    for (const FiniteModule& M : modules) submodules.push_back(enumerate_submodules(M, 64));

    for (const Ideal& P : ctx.ideals()) {
        if (!P.proper(ctx.R)) continue;
        const Bitset& bits = P.members();
        struct Variant { const char* name; bool hyp; };
        for (const Variant& v :
             {Variant{"2aqp", ctx.weakly_2aqp(bits) && !ctx.plain_2aqp(bits)},
              Variant{"qp", ctx.weakly_qp(bits) && !ctx.plain_qp(bits)}}) {
            // (i) P inside Jac(R).
            acc.tally(v.hyp);
            if (v.hyp && !bits.subset_of(ctx.jacobson()))
                acc.violate(ctx.R, json{{"part", "(i)"}, {"variant", v.name},
                                        {"ideal", ideal_json(bits)}});

            for (std::size_t mi = 0; mi < modules.size(); ++mi) {
                const FiniteModule& M = modules[mi];
                acc.tally(v.hyp);
                if (!v.hyp) continue;

                Bitset products(static_cast<std::size_t>(M.order()));
                for (int p : bits.elements())
                    for (int m = 0; m < M.order(); ++m)
                        products.set(static_cast<std::size_t>(M.scalar(p, m)));
                Bitset PM = submodule_span(M, products.elements());
                Bitset fullM(static_cast<std::size_t>(M.order()));
                for (int m = 0; m < M.order(); ++m) fullM.set(static_cast<std::size_t>(m));

                // (ii) PM = M forces M = 0; our modules are nonzero.
                if (PM == fullM)
                    acc.violate(ctx.R, json{{"part", "(ii)"}, {"variant", v.name},
                                            {"ideal", ideal_json(bits)},
                                            {"module", M.spec().to_json()}});

                // (iii) PM + N = M forces N = M, over every submodule N.
                for (const Bitset& N : submodules[mi]) {
                    if (N == fullM) continue;
                    Bitset sum = submodule_span(M, (PM | N).elements());
                    if (sum == fullM)
                        acc.violate(ctx.R, json{{"part", "(iii)"}, {"variant", v.name},
                                                {"ideal", ideal_json(bits)},
                                                {"module", M.spec().to_json()},
                                                {"submodule", ideal_json(N)}});
                }
            }
        }
    }
}

std::vector<std::vector<int>> multiplicative_sets(const FiniteRing& R) {
    std::set<Bitset> found;
    std::vector<Bitset> work;
    auto to_bits = [&](const std::vector<int>& v) {
        Bitset b(static_cast<std::size_t>(R.order()));
        for (int x : v) b.set(static_cast<std::size_t>(x));
        return b;
    };
    Bitset trivial = to_bits(multiplicative_closure(R, {}));
    found.insert(trivial);
    work.push_back(trivial);
    while (!work.empty()) {
        Bitset cur = work.back();
        work.pop_back();
        for (int x = 1; x < R.order(); ++x) {
            if (cur.test(static_cast<std::size_t>(x))) continue;
            std::vector<int> gens = cur.elements();
            gens.push_back(x);
            Bitset ext = to_bits(multiplicative_closure(R, gens));
            if (ext.test(0)) continue;
            if (found.insert(ext).second) work.push_back(ext);
        }
    }
    std::vector<Bitset> sorted(found.begin(), found.end());
    std::sort(sorted.begin(), sorted.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    std::vector<std::vector<int>> out;
    out.reserve(sorted.size());
    for (const Bitset& b : sorted) out.push_back(b.elements());
    return out;
}

void run_t_quo(Workspace& ws, RingCtx& ctx, Acc& acc) {
    constexpr int kOrderCap = 24;
    if (ctx.R.order() > kOrderCap) return;
    acc.bump("rings_in_scope");
    acc.notes.insert("phi_q evaluated as S^-1(phi(P)) with P the caller-supplied preimage");

    std::vector<std::vector<int>> sets = multiplicative_sets(ctx.R);
    acc.bump("multiplicative_sets", static_cast<std::int64_t>(sets.size()));

    for (const std::vector<int>& S : sets) {
        Bitset s_bits(static_cast<std::size_t>(ctx.R.order()));
        for (int x : S) s_bits.set(static_cast<std::size_t>(x));

        RingCtx& loc = ws.ctx_spec(RingSpec::localization(ctx.R.spec(), S), false);
        const std::vector<int>& hom = loc.R.localization_hom();
        auto push_forward = [&](const Bitset& bits) {
            Bitset seed(static_cast<std::size_t>(loc.R.order()));
            bits.for_each([&](int x) { seed.set(static_cast<std::size_t>(hom[static_cast<std::size_t>(x)])); });
            return span(loc.R, seed).members();
        };

        for (const Ideal& P : ctx.ideals()) {
            if (!P.proper(ctx.R)) continue;
            const Bitset& bits = P.members();
            for (const PhiSpec& phi : ws.ladder) {
                PhiValue phiP = ctx.phi_at(phi, bits);
                Bitset SP = push_forward(bits);
                PhiValue SphiP = phiP ? PhiValue(push_forward(*phiP)) : std::nullopt;
                if (SphiP) SphiP = *SphiP & SP;  // phi_q(S^-1 P) normalized inside S^-1 P

                bool sp_proper = !SP.test(static_cast<std::size_t>(loc.R.one()));
                bool loc_taqp =
                    sp_proper && loc.holds(Property::TwoAbsorbingQuasiPrimary, SP, SphiP).holds;

                // (i) P phi-2AQP with S disjoint from P localizes.
                bool hyp_i = (bits & s_bits).none() &&
                             ctx.holds(Property::TwoAbsorbingQuasiPrimary, bits, phiP).holds;
                acc.tally(hyp_i);
                if (hyp_i && !loc_taqp)
                    acc.violate(ctx.R, json{{"part", "(i)"}, {"ideal", ideal_json(bits)},
                                            {"phi", phi.name()}, {"S", S}});

                // (ii) with both Z-set disjointness conditions the property
                // pulls back from S^-1 R.
                bool z_ok = (ctx.zset(bits) & s_bits).none() &&
                            (!phiP || (ctx.zset(*phiP) & s_bits).none());
                bool hyp_ii = z_ok && loc_taqp;
                acc.tally(hyp_ii);
                if (hyp_ii && !ctx.holds(Property::TwoAbsorbingQuasiPrimary, bits, phiP).holds)
                    acc.violate(ctx.R, json{{"part", "(ii)"}, {"ideal", ideal_json(bits)},
                                            {"phi", phi.name()}, {"S", S}});
            }
        }
    }
}

void run_t_idealz(Workspace& ws, RingCtx& ctx, Acc& acc) {
    if (ctx.R.spec().kind != RingSpec::Kind::Idealization) return;
    acc.bump("idealizations_in_scope");

    const FiniteRing& B = ctx.R.idealization_base();
    const FiniteModule& M = ctx.R.idealization_module();
    RingCtx& bctx = ws.ctx_ring(B, true);
    int mo = M.order();

    auto annihilates = [&](int x) {
        for (int m = 0; m < mo; ++m)
            if (M.scalar(x, m) != 0) return false;
        return true;
    };

    for (const Ideal& I : bctx.ideals()) {
        if (!I.proper(B)) continue;
        const Bitset& bits = I.members();

        Bitset ixm(static_cast<std::size_t>(ctx.R.order()));
        bits.for_each([&](int r) {
            for (int m = 0; m < mo; ++m) ixm.set(static_cast<std::size_t>(r * mo + m));
        });

        bool lhs = ctx.weakly_2aqp(ixm);

        const auto& zeros = bctx.triple_zeros(bits);
        if (!zeros.empty()) acc.bump("triple_zero_instances");
        bool kills = true;
        for (const auto& t : zeros) {
            if (!annihilates(B.mul(t[0], t[1])) || !annihilates(B.mul(t[0], t[2])) ||
                !annihilates(B.mul(t[1], t[2]))) {
                kills = false;
                break;
            }
        }
        bool rhs = bctx.weakly_2aqp(bits) && kills;

        acc.tally(lhs || rhs);
        if (lhs != rhs)
            acc.violate(ctx.R, json{{"ideal", ideal_json(bits)}, {"IxM", lhs}, {"base", rhs},
                                    {"triple_zeros", static_cast<std::int64_t>(zeros.size())}});
    }
}

void run_t_vnr(Workspace& ws, RingCtx& ctx, Acc& acc) {
    if (!is_flat_product(ctx.R) || ctx.R.spec().factors.size() < 3) return;
    acc.bump("products_in_scope");

    FlatProduct fp = flat_product(ws, ctx);
    bool all_vnr = true;
    for (RingCtx* part : fp.parts) all_vnr = all_vnr && part->vnr();

    for (int n = 2; n <= ws.opts.n_max; ++n) {
        PhiSpec phin = PhiSpec::power(n);
        bool every = true;
        json witness;
        for (const Ideal& J : ctx.ideals()) {
            if (!J.proper(ctx.R)) continue;
            PhiValue v = ctx.phi_at(phin, J.members());
            PredicateOutcome out = ctx.holds(Property::TwoAbsorbingQuasiPrimary, J.members(), v);
            if (!out.holds) {
                every = false;
                witness = json{{"ideal", ideal_json(J.members())}, {"triple", out.witness}};
                break;
            }
        }
        acc.tally(every || all_vnr);
        if (every != all_vnr)
            acc.violate(ctx.R, json{{"n", n}, {"every_ideal_phin_2aqp", every},
                                    {"factors_vnr", all_vnr}, {"witness", witness}});
    }
}

// psi evaluated at the whole ring: full ideal of the part.
bool psi_fixes_unit(RingCtx& part, const PhiSpec& psi) {
    Bitset full = part.full_bits();
    PhiValue v = part.phi_at(psi, full);
    return v && *v == full;
}

void run_t_tsi(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (TwoFactorView& view : two_factor_views(ws, ctx, false)) {
        Bitset full1 = view.p1->full_bits();
        Bitset full2 = view.p2->full_bits();
        for (const PhiSpec& psi1 : ws.ladder) {
            for (const PhiSpec& psi2 : ws.ladder) {
                bool psi2_fix = psi_fixes_unit(*view.p2, psi2);
                bool psi1_fix = psi_fixes_unit(*view.p1, psi1);
                for (const Ideal& J : ctx.ideals()) {
                    if (!J.proper(ctx.R)) continue;
                    auto [j1, j2] = view.project(J.members());
                    PhiValue phiJ = view.product_phi(psi1, psi2, j1, j2);
                    bool lhs = ctx.holds(Property::QuasiPrimary, J.members(), phiJ).holds;

                    PhiValue v1 = view.p1->phi_at(psi1, j1);
                    PhiValue v2 = view.p2->phi_at(psi2, j2);
                    bool type_i = v1 && *v1 == j1 && v2 && *v2 == j2;
                    bool type_ii = (j2 == full2) &&
                                   view.p1->holds(Property::QuasiPrimary, j1, v1).holds &&
                                   (psi2_fix || view.p1->holds(Property::QuasiPrimary, j1, std::nullopt).holds);
                    bool type_iii = (j1 == full1) &&
                                    view.p2->holds(Property::QuasiPrimary, j2, v2).holds &&
                                    (psi1_fix || view.p2->holds(Property::QuasiPrimary, j2, std::nullopt).holds);
                    bool rhs = type_i || type_ii || type_iii;

                    acc.tally(lhs || rhs);
                    if (lhs != rhs)
                        acc.violate(ctx.R, json{{"split", view.split},
                                                {"ideal", ideal_json(J.members())},
                                                {"psi1", psi1.name()}, {"psi2", psi2.name()},
                                                {"phi_qp", lhs},
                                                {"types", json::array({type_i, type_ii, type_iii})}});
                }
            }
        }
    }
}

void run_t_prodn(Workspace& ws, RingCtx& ctx, Acc& acc) {
    if (!is_flat_product(ctx.R)) return;
    FlatProduct fp = flat_product(ws, ctx);
    std::size_t k = fp.parts.size();

    std::vector<Bitset> fulls;
    fulls.reserve(k);
    for (RingCtx* p : fp.parts) fulls.push_back(p->full_bits());

    std::vector<std::size_t> psi_idx(k, 0);
    for (;;) {
        std::vector<const PhiSpec*> psis(k);
        for (std::size_t i = 0; i < k; ++i) psis[i] = &ws.ladder[psi_idx[i]];

        std::vector<bool> fixes(k);
        for (std::size_t i = 0; i < k; ++i) fixes[i] = psi_fixes_unit(*fp.parts[i], *psis[i]);

        for (const Ideal& J : ctx.ideals()) {
            if (!J.proper(ctx.R)) continue;
            std::vector<Bitset> comps = fp.project(J.members());
            PhiValue phiJ = fp.product_phi(psis, comps);
            bool lhs = ctx.holds(Property::QuasiPrimary, J.members(), phiJ).holds;

            bool type_i = true;
            for (std::size_t i = 0; i < k && type_i; ++i) {
                PhiValue v = fp.parts[i]->phi_at(*psis[i], comps[i]);
                type_i = v && *v == comps[i];
            }

            bool type_ii = false;
            for (std::size_t t = 0; t < k && !type_ii; ++t) {
                if (comps[t] == fulls[t]) continue;
                bool others_full = true;
                bool some_other_moves = false;
                for (std::size_t j = 0; j < k; ++j) {
                    if (j == t) continue;
                    if (comps[j] != fulls[j]) others_full = false;
                    if (!fixes[j]) some_other_moves = true;
                }
                if (!others_full) continue;
                PhiValue vt = fp.parts[t]->phi_at(*psis[t], comps[t]);
                bool qp_t = fp.parts[t]->holds(Property::QuasiPrimary, comps[t], vt).holds;
                bool plain_t = fp.parts[t]->holds(Property::QuasiPrimary, comps[t], std::nullopt).holds;
                type_ii = qp_t && (!some_other_moves || plain_t);
            }

            bool rhs = type_i || type_ii;
            acc.tally(lhs || rhs);
            if (lhs != rhs) {
                json psi_names = json::array();
                for (std::size_t i = 0; i < k; ++i) psi_names.push_back(psis[i]->name());
                acc.violate(ctx.R, json{{"ideal", ideal_json(J.members())},
                                        {"psis", psi_names},
                                        {"phi_qp", lhs},
                                        {"types", json::array({type_i, type_ii})}});
            }
        }

        std::size_t i = k;
        while (i > 0 && ++psi_idx[i - 1] == ws.ladder.size()) {
            psi_idx[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
}

void run_t_car(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (TwoFactorView& view : two_factor_views(ws, ctx, true)) {
        Bitset full2 = view.p2->full_bits();
        for (const PhiSpec& psi1 : ws.ladder) {
            for (const PhiSpec& psi2 : ws.ladder) {
                bool gate = !psi_fixes_unit(*view.p2, psi2);  // psi2(R2) != R2
                for (const Ideal& I1 : view.p1->ideals()) {
                    if (!I1.proper(view.p1->R)) continue;
                    if (!gate) {
                        acc.tally(false);
                        continue;
                    }
                    Bitset J = view.combine(I1.members(), full2);
                    PhiValue phiJ = view.product_phi(psi1, psi2, I1.members(), full2);
                    bool a = ctx.holds(Property::TwoAbsorbingQuasiPrimary, J, phiJ).holds;
                    bool b = ctx.holds(Property::TwoAbsorbingQuasiPrimary, J, std::nullopt).holds;
                    bool c = view.p1->plain_2aqp(I1.members());
                    acc.tally(a || b || c);
                    if (a != b || b != c)
                        acc.violate(ctx.R, json{{"split", view.split}, {"mirrored", view.mirrored},
                                                {"I1", ideal_json(I1.members())},
                                                {"psi1", psi1.name()}, {"psi2", psi2.name()},
                                                {"phi_2aqp", a}, {"plain_2aqp", b},
                                                {"factor_2aqp", c}});
                }
            }
        }
    }
}

void run_t_car2(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (TwoFactorView& view : two_factor_views(ws, ctx, true)) {
        Bitset full2 = view.p2->full_bits();
        for (const PhiSpec& psi1 : ws.ladder) {
            for (const PhiSpec& psi2 : ws.ladder) {
                bool psi2_fix = psi_fixes_unit(*view.p2, psi2);
                for (const Ideal& I1 : view.p1->ideals()) {
                    if (!I1.proper(view.p1->R)) continue;
                    Bitset J = view.combine(I1.members(), full2);
                    PhiValue phiJ = view.product_phi(psi1, psi2, I1.members(), full2);
                    PhiValue v1 = view.p1->phi_at(psi1, I1.members());

                    bool lhs = ctx.holds(Property::TwoAbsorbingQuasiPrimary, J, phiJ).holds &&
                               !ctx.holds(Property::TwoAbsorbingQuasiPrimary, J, std::nullopt).holds;
                    bool rhs = phiJ.has_value() && psi2_fix &&
                               view.p1->holds(Property::TwoAbsorbingQuasiPrimary, I1.members(), v1).holds &&
                               !view.p1->plain_2aqp(I1.members());
                    acc.tally(lhs || rhs);
                    if (lhs != rhs)
                        acc.violate(ctx.R, json{{"split", view.split}, {"mirrored", view.mirrored},
                                                {"I1", ideal_json(I1.members())},
                                                {"psi1", psi1.name()}, {"psi2", psi2.name()},
                                                {"lhs", lhs}, {"rhs", rhs}});
                }
            }
        }
    }
}

void run_t_weak1(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (TwoFactorView& view : two_factor_views(ws, ctx, true)) {
        Bitset full2 = view.p2->full_bits();
        for (const Ideal& I1 : view.p1->ideals()) {
            if (!I1.proper(view.p1->R)) continue;
            Bitset J = view.combine(I1.members(), full2);
            bool a = ctx.weakly_2aqp(J);
            bool b = ctx.plain_2aqp(J);
            bool c = view.p1->plain_2aqp(I1.members());
            acc.tally(a || b || c);
            if (a != b || b != c)
                acc.violate(ctx.R, json{{"split", view.split}, {"mirrored", view.mirrored},
                                        {"I1", ideal_json(I1.members())},
                                        {"weakly", a}, {"plain", b}, {"factor", c}});
        }
    }
}

void run_t_weak2(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (TwoFactorView& view : two_factor_views(ws, ctx, false)) {
        Bitset full1 = view.p1->full_bits();
        Bitset full2 = view.p2->full_bits();
        for (const Ideal& J : ctx.ideals()) {
            if (!J.proper(ctx.R)) continue;
            auto [i1, i2] = view.project(J.members());
            bool gate = i1.count() > 1 && i2.count() > 1;  // both nonzero
            if (!gate) {
                acc.tally(false);
                continue;
            }
            bool a = ctx.weakly_2aqp(J.members());
            bool b = ctx.plain_2aqp(J.members());
            bool c = (i1 == full1 && view.p2->plain_2aqp(i2)) ||
                     (i2 == full2 && view.p1->plain_2aqp(i1)) ||
                     (i1 != full1 && i2 != full2 && view.p1->plain_qp(i1) &&
                      view.p2->plain_qp(i2));
            acc.tally(a || b || c);
            if (a != b || b != c)
                acc.violate(ctx.R, json{{"split", view.split}, {"ideal", ideal_json(J.members())},
                                        {"weakly", a}, {"plain", b}, {"decomposed", c}});
        }
    }
}

void run_t_weak3(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (TwoFactorView& view : two_factor_views(ws, ctx, false)) {
        Bitset full1 = view.p1->full_bits();
        Bitset full2 = view.p2->full_bits();
        Bitset zero1 = view.p1->zero_bits();
        Bitset zero2 = view.p2->zero_bits();
        for (const Ideal& J : ctx.ideals()) {
            if (!J.proper(ctx.R)) continue;
            if (J.members().count() <= 1) {  // nonzero ideal required
                acc.tally(false);
                continue;
            }
            auto [i1, i2] = view.project(J.members());
            bool lhs = ctx.weakly_2aqp(J.members()) && !ctx.plain_2aqp(J.members());
            bool case_i = i1 != full1 && i1.count() > 1 && view.p1->weakly_qp(i1) &&
                          !view.p1->plain_qp(i1) && i2 == zero2 && view.p2->plain_qp(zero2);
            bool case_ii = i2 != full2 && i2.count() > 1 && view.p2->weakly_qp(i2) &&
                           !view.p2->plain_qp(i2) && i1 == zero1 && view.p1->plain_qp(zero1);
            bool rhs = case_i || case_ii;
            acc.tally(lhs || rhs);
            if (lhs != rhs)
                acc.violate(ctx.R, json{{"split", view.split}, {"ideal", ideal_json(J.members())},
                                        {"lhs", lhs}, {"cases", json::array({case_i, case_ii})}});
        }
    }
}

void run_t_car3(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (TwoFactorView& view : two_factor_views(ws, ctx, false)) {
        Bitset full1 = view.p1->full_bits();
        Bitset full2 = view.p2->full_bits();
        for (const PhiSpec& psi1 : ws.ladder) {
            for (const PhiSpec& psi2 : ws.ladder) {
                bool fix1 = psi_fixes_unit(*view.p1, psi1);
                bool fix2 = psi_fixes_unit(*view.p2, psi2);
                for (const Ideal& J : ctx.ideals()) {
                    if (!J.proper(ctx.R)) continue;
                    auto [i1, i2] = view.project(J.members());
                    PhiValue phiJ = view.product_phi(psi1, psi2, i1, i2);
                    bool gate = J.members().count() > 1 &&
                                !(phiJ && *phiJ == J.members());  // nonzero, phi(I) != I
                    if (!gate) {
                        acc.tally(false);
                        continue;
                    }
                    PhiValue v1 = view.p1->phi_at(psi1, i1);
                    PhiValue v2 = view.p2->phi_at(psi2, i2);

                    bool lhs = ctx.holds(Property::TwoAbsorbingQuasiPrimary, J.members(), phiJ).holds &&
                               !ctx.plain_2aqp(J.members());

                    bool c_i = fix2 && i1 != full1 &&
                               view.p1->holds(Property::TwoAbsorbingQuasiPrimary, i1, v1).holds &&
                               !view.p1->plain_2aqp(i1);
                    bool c_ii = fix1 && i2 != full2 &&
                                view.p2->holds(Property::TwoAbsorbingQuasiPrimary, i2, v2).holds &&
                                !view.p2->plain_2aqp(i2);
                    bool c_iii = i2 != full2 && v2 && *v2 == i2 && view.p2->plain_qp(i2) &&
                                 i1 != full1 && view.p1->holds(Property::QuasiPrimary, i1, v1).holds &&
                                 !view.p1->plain_qp(i1) && !(v1 && *v1 == i1);
                    bool c_iv = i1 != full1 && v1 && *v1 == i1 && view.p1->plain_qp(i1) &&
                                i2 != full2 && view.p2->holds(Property::QuasiPrimary, i2, v2).holds &&
                                !view.p2->plain_qp(i2) && !(v2 && *v2 == i2);
                    bool rhs = phiJ.has_value() && (c_i || c_ii || c_iii || c_iv);

                    acc.tally(lhs || rhs);
                    if (lhs != rhs)
                        acc.violate(ctx.R,
                                    json{{"split", view.split}, {"ideal", ideal_json(J.members())},
                                         {"psi1", psi1.name()}, {"psi2", psi2.name()},
                                         {"lhs", lhs},
                                         {"cases", json::array({c_i, c_ii, c_iii, c_iv})}});
                }
            }
        }
    }
}

void run_t_car4(Workspace& ws, RingCtx& ctx, Acc& acc) {
    for (TwoFactorView& view : two_factor_views(ws, ctx, false)) {
        Bitset full1 = view.p1->full_bits();
        Bitset full2 = view.p2->full_bits();
        for (const PhiSpec& psi1 : ws.ladder) {
            for (const PhiSpec& psi2 : ws.ladder) {
                for (const Ideal& J : ctx.ideals()) {
                    if (!J.proper(ctx.R)) continue;
                    auto [i1, i2] = view.project(J.members());
                    PhiValue v1 = view.p1->phi_at(psi1, i1);
                    PhiValue v2 = view.p2->phi_at(psi2, i2);
                    bool gate = i1.count() > 1 && i2.count() > 1 && !(v1 && *v1 == i1) &&
                                !(v2 && *v2 == i2);
                    if (!gate) {
                        acc.tally(false);
                        continue;
                    }
                    PhiValue phiJ = view.product_phi(psi1, psi2, i1, i2);
                    bool a = ctx.holds(Property::TwoAbsorbingQuasiPrimary, J.members(), phiJ).holds;
                    bool b = (i1 == full1 && view.p2->plain_2aqp(i2)) ||
                             (i2 == full2 && view.p1->plain_2aqp(i1)) ||
                             (i1 != full1 && i2 != full2 && view.p1->plain_qp(i1) &&
                              view.p2->plain_qp(i2));
                    bool c = ctx.plain_2aqp(J.members());
                    acc.tally(a || b || c);
                    if (a != b || b != c)
                        acc.violate(ctx.R,
                                    json{{"split", view.split}, {"ideal", ideal_json(J.members())},
                                         {"psi1", psi1.name()}, {"psi2", psi2.name()},
                                         {"phi_2aqp", a}, {"decomposed", b}, {"plain_2aqp", c}});
                }
            }
        }
    }
}

void run_theorem(const std::string& id, Workspace& ws, const FiniteRing& R, Acc& acc) {
    RingCtx& ctx = ws.ctx_ring(R, true);
    if (id == "T-PP") run_t_pp(ws, ctx, acc);
    else if (id == "T-T1") run_t_t1(ws, ctx, acc);
    else if (id == "T-T2") run_t_t2(ws, ctx, acc);
    else if (id == "T-PQ") run_quotient_transfer(ws, ctx, acc, true);
    else if (id == "T-PQ2") run_quotient_transfer(ws, ctx, acc, false);
    else if (id == "T-METHOD") run_t_method(ws, ctx, acc);
    else if (id == "T-PC") run_t_pc(ws, ctx, acc, false);
    else if (id == "T-COR2") run_t_pc(ws, ctx, acc, true);
    else if (id == "T-TTC") run_t_ttc(ws, ctx, acc);
    else if (id == "T-EQUIV") run_t_equiv(ws, ctx, acc);
    else if (id == "T-WQP") run_t_wqp(ws, ctx, acc);
    else if (id == "T-NAK") run_t_nak(ws, ctx, acc);
    else if (id == "T-QUO") run_t_quo(ws, ctx, acc);
    else if (id == "T-IDEALZ") run_t_idealz(ws, ctx, acc);
    else if (id == "T-VNR") run_t_vnr(ws, ctx, acc);
    else if (id == "T-TSI") run_t_tsi(ws, ctx, acc);
    else if (id == "T-PRODN") run_t_prodn(ws, ctx, acc);
    else if (id == "T-CAR") run_t_car(ws, ctx, acc);
    else if (id == "T-CAR2") run_t_car2(ws, ctx, acc);
    else if (id == "T-WEAK1") run_t_weak1(ws, ctx, acc);
    else if (id == "T-WEAK2") run_t_weak2(ws, ctx, acc);
    else if (id == "T-WEAK3") run_t_weak3(ws, ctx, acc);
    else if (id == "T-CAR3") run_t_car3(ws, ctx, acc);
    else if (id == "T-CAR4") run_t_car4(ws, ctx, acc);
    else throw UnknownTheorem("unknown theorem id: " + id);
}

}  // namespace

const std::vector<std::string>& all_theorem_ids() {
    static const std::vector<std::string> ids = {
        "T-PP",   "T-T1",    "T-T2",    "T-PQ",    "T-PQ2",  "T-METHOD",
        "T-PC",   "T-COR2",  "T-TTC",   "T-EQUIV", "T-WQP",  "T-NAK",
        "T-QUO",  "T-IDEALZ", "T-VNR",  "T-TSI",   "T-PRODN", "T-CAR",
        "T-CAR2", "T-WEAK1", "T-WEAK2", "T-WEAK3", "T-CAR3", "T-CAR4"};
    return ids;
}

bool known_theorem(const std::string& id) {
    const auto& ids = all_theorem_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

json VerificationReport::to_json() const {
    json v = json::array();
    for (const auto& viol : violations)
        v.push_back(json{{"ring", json::parse(viol.ring)}, {"instance", viol.instance}});
    json d = json::object();
    for (const auto& [k, n] : details) d[k] = n;
    return json{{"schema_version", 1},
                {"theorem", theorem_id},
                {"instances_checked", instances_checked},
                {"vacuous_instances", vacuous_instances},
                {"non_vacuous_instances", non_vacuous()},
                {"violations", v},
                {"details", d},
                {"flagged", flagged},
                {"notes", json(notes)}};
}

std::vector<VerificationReport> verify_many(const std::vector<std::string>& ids,
                                            const std::vector<FiniteRing>& corpus,
                                            const VerifyOptions& opts) {
    for (const auto& id : ids)
        if (!known_theorem(id)) throw UnknownTheorem("unknown theorem id: " + id);

    const std::size_t nt = ids.size();
    const std::size_t nr = corpus.size();
    std::vector<std::vector<Acc>> accs(nr, std::vector<Acc>(nt));
    std::vector<std::vector<double>> times(nr, std::vector<double>(nt, 0.0));

    auto process_ring = [&](Workspace& ws, std::size_t ri) {
        for (std::size_t ti = 0; ti < nt; ++ti) {
            auto t0 = std::chrono::steady_clock::now();
            run_theorem(ids[ti], ws, corpus[ri], accs[ri][ti]);
            times[ri][ti] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        ws.clear_scratch();
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || nr <= 1) {
        Workspace ws(opts);
        for (std::size_t ri = 0; ri < nr; ++ri) process_ring(ws, ri);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&]() {
                Workspace ws(opts);
                for (;;) {
                    std::size_t ri = next.fetch_add(1);
                    if (ri >= nr) break;
                    process_ring(ws, ri);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Deterministic merge in corpus order regardless of completion order.
    std::vector<VerificationReport> reports(nt);
    for (std::size_t ti = 0; ti < nt; ++ti) {
        VerificationReport& rep = reports[ti];
        rep.theorem_id = ids[ti];
        for (std::size_t ri = 0; ri < nr; ++ri) {
            const Acc& a = accs[ri][ti];
            rep.instances_checked += a.checked;
            rep.vacuous_instances += a.vacuous;
            rep.violations.insert(rep.violations.end(), a.violations.begin(), a.violations.end());
            for (const auto& [k, n] : a.details) rep.details[k] += n;
            rep.flagged.insert(rep.flagged.end(), a.flagged.begin(), a.flagged.end());
            rep.notes.insert(a.notes.begin(), a.notes.end());
            rep.wall_time_sec += times[ri][ti];
        }
        // A pass with no content is surfaced, never hidden.
        if (rep.instances_checked > 0 && rep.non_vacuous() == 0)
            rep.notes.insert("all instances vacuous over this corpus");
    }
    return reports;
}

VerificationReport verify(const std::string& theorem_id, const std::vector<FiniteRing>& corpus,
                          const VerifyOptions& opts) {
    return verify_many({theorem_id}, corpus, opts)[0];
}

}  // namespace absorblab
