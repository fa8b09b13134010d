#include "absorblab/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace absorblab {

namespace {

std::string joined_label(const std::vector<std::string>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    out += ")";
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Impl definitions
// ---------------------------------------------------------------------------

struct FiniteRing::Impl {
    RingSpec spec;
    std::string key;
    int order = 0;
    int one = 0;
    std::vector<int> add_t;   // order*order
    std::vector<int> mul_t;   // order*order
    std::vector<int> neg_t;   // order
    std::vector<char> unit_t; // order
    std::vector<std::string> labels;

    // Structure, populated per spec kind.
    std::vector<FiniteRing> factors;
    std::vector<int> strides;      // product: index stride per factor
    FiniteRing base;               // quotient / localization / idealization
    FiniteModule module;           // idealization
    std::vector<int> projection;   // quotient: base idx -> class
    std::vector<int> class_rep;    // quotient: class -> base idx
    std::vector<int> hom;          // localization: base idx -> class

    int add(int a, int b) const { return add_t[a * order + b]; }
    int mul(int a, int b) const { return mul_t[a * order + b]; }
};

struct FiniteModule::Impl {
    ModuleSpec spec;
    std::string key;
    FiniteRing ring;
    int order = 0;
    std::vector<int> add_t;     // order*order
    std::vector<int> neg_t;     // order
    std::vector<int> scalar_t;  // ring.order*order
    std::vector<std::string> labels;

    // DirectSum structure
    std::vector<FiniteModule> summands;
    std::vector<int> strides;
};

// ---------------------------------------------------------------------------
// FiniteRing accessors
// ---------------------------------------------------------------------------

int FiniteRing::order() const { return impl_->order; }
int FiniteRing::one() const { return impl_->one; }
int FiniteRing::add(int a, int b) const { return impl_->add_t[a * impl_->order + b]; }
int FiniteRing::mul(int a, int b) const { return impl_->mul_t[a * impl_->order + b]; }
int FiniteRing::neg(int a) const { return impl_->neg_t[a]; }
const std::string& FiniteRing::label(int a) const { return impl_->labels[a]; }
const RingSpec& FiniteRing::spec() const { return impl_->spec; }
const std::string& FiniteRing::key() const { return impl_->key; }
bool FiniteRing::is_unit(int a) const { return impl_->unit_t[a] != 0; }

int FiniteRing::additive_order(int a) const {
    int k = 1;
    int x = a;
    while (x != 0) {
        x = add(x, a);
        ++k;
    }
    return k;
}

int FiniteRing::product_arity() const {
    if (impl_->spec.kind != RingSpec::Kind::Product)
        throw SpecMismatch("ring is not a product: " + key());
    return static_cast<int>(impl_->factors.size());
}

const FiniteRing& FiniteRing::factor(int i) const {
    if (impl_->spec.kind != RingSpec::Kind::Product)
        throw SpecMismatch("ring is not a product: " + key());
    return impl_->factors.at(static_cast<std::size_t>(i));
}

int FiniteRing::product_encode(std::span<const int> components) const {
    int arity = product_arity();
    if (static_cast<int>(components.size()) != arity)
        throw SpecMismatch("component count does not match product arity");
    int idx = 0;
    for (int i = 0; i < arity; ++i) idx += components[static_cast<std::size_t>(i)] * impl_->strides[static_cast<std::size_t>(i)];
    return idx;
}

std::vector<int> FiniteRing::product_decode(int idx) const {
    int arity = product_arity();
    std::vector<int> out(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) {
        out[static_cast<std::size_t>(i)] = idx / impl_->strides[static_cast<std::size_t>(i)];
        idx %= impl_->strides[static_cast<std::size_t>(i)];
    }
    return out;
}

const FiniteRing& FiniteRing::idealization_base() const {
    if (impl_->spec.kind != RingSpec::Kind::Idealization)
        throw SpecMismatch("ring is not an idealization: " + key());
    return impl_->base;
}

const FiniteModule& FiniteRing::idealization_module() const {
    if (impl_->spec.kind != RingSpec::Kind::Idealization)
        throw SpecMismatch("ring is not an idealization: " + key());
    return impl_->module;
}

int FiniteRing::idealization_encode(int r, int m) const {
    return r * idealization_module().order() + m;
}

std::pair<int, int> FiniteRing::idealization_decode(int idx) const {
    int mo = idealization_module().order();
    return {idx / mo, idx % mo};
}

const std::vector<int>& FiniteRing::quotient_projection() const {
    if (impl_->spec.kind != RingSpec::Kind::Quotient)
        throw SpecMismatch("ring is not a quotient: " + key());
    return impl_->projection;
}

const std::vector<int>& FiniteRing::localization_hom() const {
    if (impl_->spec.kind != RingSpec::Kind::Localization)
        throw SpecMismatch("ring is not a localization: " + key());
    return impl_->hom;
}

// ---------------------------------------------------------------------------
// FiniteModule accessors
// ---------------------------------------------------------------------------

int FiniteModule::order() const { return impl_->order; }
int FiniteModule::add(int a, int b) const { return impl_->add_t[a * impl_->order + b]; }
int FiniteModule::neg(int a) const { return impl_->neg_t[a]; }
int FiniteModule::scalar(int r, int m) const { return impl_->scalar_t[r * impl_->order + m]; }
const std::string& FiniteModule::label(int m) const { return impl_->labels[m]; }
const ModuleSpec& FiniteModule::spec() const { return impl_->spec; }
const FiniteRing& FiniteModule::ring() const { return impl_->ring; }
const std::string& FiniteModule::key() const { return impl_->key; }

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

namespace {

void finalize_units(FiniteRing::Impl& im) {
    im.unit_t.assign(static_cast<std::size_t>(im.order), 0);
    for (int a = 0; a < im.order; ++a) {
        for (int b = 0; b < im.order; ++b) {
            if (im.mul(a, b) == im.one) {
                im.unit_t[static_cast<std::size_t>(a)] = 1;
                break;
            }
        }
    }
}

std::shared_ptr<FiniteRing::Impl> make_zn(int n) {
    if (n < 2) throw MalformedSpec("Zn requires n >= 2 (the zero ring is rejected)");
    auto im = std::make_shared<FiniteRing::Impl>();
    im->order = n;
    im->one = 1;
    im->add_t.resize(static_cast<std::size_t>(n) * n);
    im->mul_t.resize(static_cast<std::size_t>(n) * n);
    im->neg_t.resize(static_cast<std::size_t>(n));
    im->labels.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        im->neg_t[static_cast<std::size_t>(a)] = (n - a) % n;
        im->labels[static_cast<std::size_t>(a)] = std::to_string(a);
        for (int b = 0; b < n; ++b) {
            im->add_t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
            im->mul_t[static_cast<std::size_t>(a * n + b)] = (a * b) % n;
        }
    }
    return im;
}

std::shared_ptr<FiniteRing::Impl> make_product(std::vector<FiniteRing> factors, int max_order) {
    long long total = 1;
    for (const auto& f : factors) {
        total *= f.order();
        if (total > max_order) throw OrderTooLarge("product order exceeds build cap");
    }
    int n = static_cast<int>(total);
    auto im = std::make_shared<FiniteRing::Impl>();
    im->order = n;
    im->factors = std::move(factors);
    int arity = static_cast<int>(im->factors.size());
    im->strides.assign(static_cast<std::size_t>(arity), 1);
    for (int i = arity - 2; i >= 0; --i)
        im->strides[static_cast<std::size_t>(i)] =
            im->strides[static_cast<std::size_t>(i + 1)] * im->factors[static_cast<std::size_t>(i + 1)].order();

    auto decode = [&](int idx, std::vector<int>& comps) {
        for (int i = 0; i < arity; ++i) {
            comps[static_cast<std::size_t>(i)] = idx / im->strides[static_cast<std::size_t>(i)];
            idx %= im->strides[static_cast<std::size_t>(i)];
        }
    };
    auto encode = [&](const std::vector<int>& comps) {
        int idx = 0;
        for (int i = 0; i < arity; ++i) idx += comps[static_cast<std::size_t>(i)] * im->strides[static_cast<std::size_t>(i)];
        return idx;
    };

    std::vector<int> ones(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) ones[static_cast<std::size_t>(i)] = im->factors[static_cast<std::size_t>(i)].one();
    im->one = encode(ones);

    im->add_t.resize(static_cast<std::size_t>(n) * n);
    im->mul_t.resize(static_cast<std::size_t>(n) * n);
    im->neg_t.resize(static_cast<std::size_t>(n));
    im->labels.resize(static_cast<std::size_t>(n));

    std::vector<int> ca(static_cast<std::size_t>(arity)), cb(static_cast<std::size_t>(arity)), cr(static_cast<std::size_t>(arity));
    for (int a = 0; a < n; ++a) {
        decode(a, ca);
        std::vector<std::string> parts;
        parts.reserve(static_cast<std::size_t>(arity));
        for (int i = 0; i < arity; ++i) {
            cr[static_cast<std::size_t>(i)] = im->factors[static_cast<std::size_t>(i)].neg(ca[static_cast<std::size_t>(i)]);
            parts.push_back(im->factors[static_cast<std::size_t>(i)].label(ca[static_cast<std::size_t>(i)]));
        }
        im->neg_t[static_cast<std::size_t>(a)] = encode(cr);
        im->labels[static_cast<std::size_t>(a)] = joined_label(parts);
        for (int b = 0; b < n; ++b) {
            decode(b, cb);
            for (int i = 0; i < arity; ++i)
                cr[static_cast<std::size_t>(i)] =
                    im->factors[static_cast<std::size_t>(i)].add(ca[static_cast<std::size_t>(i)], cb[static_cast<std::size_t>(i)]);
            im->add_t[static_cast<std::size_t>(a * n + b)] = encode(cr);
            for (int i = 0; i < arity; ++i)
                cr[static_cast<std::size_t>(i)] =
                    im->factors[static_cast<std::size_t>(i)].mul(ca[static_cast<std::size_t>(i)], cb[static_cast<std::size_t>(i)]);
            im->mul_t[static_cast<std::size_t>(a * n + b)] = encode(cr);
        }
    }
    return im;
}

// Additive-and-scalar closure inside a ring; shared by quotient construction.
Bitset ideal_closure(const FiniteRing& R, const std::vector<int>& gens) {
    int n = R.order();
    Bitset in(static_cast<std::size_t>(n));
    std::vector<int> work;
    auto push = [&](int x) {
        if (!in.test(static_cast<std::size_t>(x))) {
            in.set(static_cast<std::size_t>(x));
            work.push_back(x);
        }
    };
    push(0);
    for (int g : gens) {
        if (g < 0 || g >= n) throw MalformedSpec("generator index out of range");
        push(g);
    }
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int r = 0; r < n; ++r) push(R.mul(r, x));
        std::vector<int> members = in.elements();
        for (int y : members) push(R.add(x, y));
    }
    return in;
}

std::shared_ptr<FiniteRing::Impl> make_quotient(FiniteRing base, const std::vector<int>& gens) {
    Bitset J = ideal_closure(base, gens);
    if (J.test(static_cast<std::size_t>(base.one())))
        throw MalformedSpec("improper quotient: generators span the whole ring");

    int bn = base.order();
    std::vector<int> members = J.elements();
    auto im = std::make_shared<FiniteRing::Impl>();
    im->base = base;
    im->projection.assign(static_cast<std::size_t>(bn), -1);
    for (int x = 0; x < bn; ++x) {
        if (im->projection[static_cast<std::size_t>(x)] != -1) continue;
        int cls = static_cast<int>(im->class_rep.size());
        im->class_rep.push_back(x);
        for (int j : members) im->projection[static_cast<std::size_t>(base.add(x, j))] = cls;
    }
    int n = static_cast<int>(im->class_rep.size());
    im->order = n;
    im->one = im->projection[static_cast<std::size_t>(base.one())];
    im->add_t.resize(static_cast<std::size_t>(n) * n);
    im->mul_t.resize(static_cast<std::size_t>(n) * n);
    im->neg_t.resize(static_cast<std::size_t>(n));
    im->labels.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        int ra = im->class_rep[static_cast<std::size_t>(a)];
        im->neg_t[static_cast<std::size_t>(a)] = im->projection[static_cast<std::size_t>(base.neg(ra))];
        im->labels[static_cast<std::size_t>(a)] = base.label(ra) + "+I";
        for (int b = 0; b < n; ++b) {
            int rb = im->class_rep[static_cast<std::size_t>(b)];
            im->add_t[static_cast<std::size_t>(a * n + b)] = im->projection[static_cast<std::size_t>(base.add(ra, rb))];
            im->mul_t[static_cast<std::size_t>(a * n + b)] = im->projection[static_cast<std::size_t>(base.mul(ra, rb))];
        }
    }
    return im;
}

std::shared_ptr<FiniteRing::Impl> make_localization(FiniteRing base, const std::vector<int>& s_gens) {
    std::vector<int> S = multiplicative_closure(base, s_gens);
    if (std::find(S.begin(), S.end(), 0) != S.end())
        throw ZeroInS("0 lies in the multiplicative closure; localization would be the zero ring");

    int ns = static_cast<int>(S.size());
    int bn = base.order();
    int pair_count = bn * ns;
    auto pid = [&](int r, int sidx) { return r * ns + sidx; };

    // (r,s) ~ (r',s')  iff  t(rs' - r's) = 0 for some t in S. The witness
    // makes the relation transitive, so grouping against representatives
    // partitions the pairs correctly.
    auto equivalent = [&](int p1, int p2) {
        int r1 = p1 / ns, s1 = S[static_cast<std::size_t>(p1 % ns)];
        int r2 = p2 / ns, s2 = S[static_cast<std::size_t>(p2 % ns)];
        int d = base.sub(base.mul(r1, s2), base.mul(r2, s1));
        for (int t : S)
            if (base.mul(t, d) == 0) return true;
        return false;
    };

    std::vector<int> cls(static_cast<std::size_t>(pair_count), -1);
    std::vector<int> rep_pair;
    for (int p = 0; p < pair_count; ++p) {
        if (cls[static_cast<std::size_t>(p)] != -1) continue;
        int c = static_cast<int>(rep_pair.size());
        rep_pair.push_back(p);
        cls[static_cast<std::size_t>(p)] = c;
        for (int q = p + 1; q < pair_count; ++q) {
            if (cls[static_cast<std::size_t>(q)] == -1 && equivalent(p, q)) cls[static_cast<std::size_t>(q)] = c;
        }
    }

    int n = static_cast<int>(rep_pair.size());
    auto im = std::make_shared<FiniteRing::Impl>();
    im->base = base;
    im->order = n;

    std::vector<int> sidx_of(static_cast<std::size_t>(bn), -1);
    for (int i = 0; i < ns; ++i) sidx_of[static_cast<std::size_t>(S[static_cast<std::size_t>(i)])] = i;
    int one_sidx = sidx_of[static_cast<std::size_t>(base.one())];
    im->one = cls[static_cast<std::size_t>(pid(base.one(), one_sidx))];

    im->hom.resize(static_cast<std::size_t>(bn));
    for (int r = 0; r < bn; ++r) im->hom[static_cast<std::size_t>(r)] = cls[static_cast<std::size_t>(pid(r, one_sidx))];

    im->add_t.resize(static_cast<std::size_t>(n) * n);
    im->mul_t.resize(static_cast<std::size_t>(n) * n);
    im->neg_t.resize(static_cast<std::size_t>(n));
    im->labels.resize(static_cast<std::size_t>(n));

    // The product of two S-members stays in S; look its index up once.
    auto smul_idx = [&](int sa, int sb) { return sidx_of[static_cast<std::size_t>(base.mul(sa, sb))]; };

    for (int a = 0; a < n; ++a) {
        int ra = rep_pair[static_cast<std::size_t>(a)] / ns;
        int sa = S[static_cast<std::size_t>(rep_pair[static_cast<std::size_t>(a)] % ns)];
        im->neg_t[static_cast<std::size_t>(a)] = cls[static_cast<std::size_t>(pid(base.neg(ra), sidx_of[static_cast<std::size_t>(sa)]))];
        im->labels[static_cast<std::size_t>(a)] = base.label(ra) + "/" + base.label(sa);
        for (int b = 0; b < n; ++b) {
            int rb = rep_pair[static_cast<std::size_t>(b)] / ns;
            int sb = S[static_cast<std::size_t>(rep_pair[static_cast<std::size_t>(b)] % ns)];
            int num = base.add(base.mul(ra, sb), base.mul(rb, sa));
            im->add_t[static_cast<std::size_t>(a * n + b)] = cls[static_cast<std::size_t>(pid(num, smul_idx(sa, sb)))];
            im->mul_t[static_cast<std::size_t>(a * n + b)] = cls[static_cast<std::size_t>(pid(base.mul(ra, rb), smul_idx(sa, sb)))];
        }
    }
    return im;
}

std::shared_ptr<FiniteRing::Impl> make_idealization(FiniteRing base, FiniteModule module, int max_order) {
    if (module.ring().key() != base.key())
        throw MalformedSpec("idealization module is not a module over the base ring");
    long long total = static_cast<long long>(base.order()) * module.order();
    if (total > max_order) throw OrderTooLarge("idealization order exceeds build cap");

    int n = static_cast<int>(total);
    int mo = module.order();
    auto im = std::make_shared<FiniteRing::Impl>();
    im->base = base;
    im->module = module;
    im->order = n;
    im->one = base.one() * mo + 0;
    im->add_t.resize(static_cast<std::size_t>(n) * n);
    im->mul_t.resize(static_cast<std::size_t>(n) * n);
    im->neg_t.resize(static_cast<std::size_t>(n));
    im->labels.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        int ra = a / mo, ma = a % mo;
        im->neg_t[static_cast<std::size_t>(a)] = base.neg(ra) * mo + module.neg(ma);
        im->labels[static_cast<std::size_t>(a)] = "(" + base.label(ra) + "," + module.label(ma) + ")";
        for (int b = 0; b < n; ++b) {
            int rb = b / mo, mb = b % mo;
            im->add_t[static_cast<std::size_t>(a * n + b)] = base.add(ra, rb) * mo + module.add(ma, mb);
            // (a,m)(b,m') = (ab, am' + bm)
            im->mul_t[static_cast<std::size_t>(a * n + b)] =
                base.mul(ra, rb) * mo + module.add(module.scalar(ra, mb), module.scalar(rb, ma));
        }
    }
    return im;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public construction
// ---------------------------------------------------------------------------

std::vector<int> multiplicative_closure(const FiniteRing& ring, const std::vector<int>& gens) {
    int n = ring.order();
    Bitset in(static_cast<std::size_t>(n));
    std::vector<int> work;
    auto push = [&](int x) {
        if (!in.test(static_cast<std::size_t>(x))) {
            in.set(static_cast<std::size_t>(x));
            work.push_back(x);
        }
    };
    push(ring.one());
    for (int g : gens) {
        if (g < 0 || g >= n) throw MalformedSpec("s-generator index out of range");
        push(g);
    }
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int y : in.elements()) push(ring.mul(x, y));
    }
    return in.elements();  // ascending
}

FiniteRing build_ring(const RingSpec& spec, const BuildOptions& opts) {
    std::shared_ptr<FiniteRing::Impl> im;
    switch (spec.kind) {
        case RingSpec::Kind::Zn:
            if (spec.n > opts.max_order) throw OrderTooLarge("Zn order exceeds build cap");
            im = make_zn(spec.n);
            break;
        case RingSpec::Kind::Product: {
            std::vector<FiniteRing> fs;
            fs.reserve(spec.factors.size());
            for (const auto& f : spec.factors) fs.push_back(build_ring(f, opts));
            im = make_product(std::move(fs), opts.max_order);
            break;
        }
        case RingSpec::Kind::Quotient:
            im = make_quotient(build_ring(*spec.base, opts), spec.gens);
            break;
        case RingSpec::Kind::Localization:
            im = make_localization(build_ring(*spec.base, opts), spec.gens);
            break;
        case RingSpec::Kind::Idealization: {
            FiniteRing base = build_ring(*spec.base, opts);
            FiniteModule mod = build_module(base, *spec.module, opts);
            im = make_idealization(base, mod, opts.max_order);
            break;
        }
    }
    im->spec = spec;
    im->key = spec.key();
    finalize_units(*im);

    FiniteRing ring;
    ring.impl_ = im;
    if (ring.order() <= opts.self_check_bound) check_ring_axioms(ring);
    if (ring.zero() == ring.one()) throw MalformedSpec("zero ring rejected: 0 = 1");
    return ring;
}

FiniteModule build_module(const FiniteRing& ring, const ModuleSpec& spec, const BuildOptions& opts) {
    auto im = std::make_shared<FiniteModule::Impl>();
    im->spec = spec;
    im->ring = ring;
    im->key = ring.key() + "|" + spec.key();

    switch (spec.kind) {
        case ModuleSpec::Kind::Regular: {
            int n = ring.order();
            im->order = n;
            im->add_t.resize(static_cast<std::size_t>(n) * n);
            im->neg_t.resize(static_cast<std::size_t>(n));
            im->scalar_t.resize(static_cast<std::size_t>(n) * n);
            im->labels.resize(static_cast<std::size_t>(n));
            for (int a = 0; a < n; ++a) {
                im->neg_t[static_cast<std::size_t>(a)] = ring.neg(a);
                im->labels[static_cast<std::size_t>(a)] = ring.label(a);
                for (int b = 0; b < n; ++b) {
                    im->add_t[static_cast<std::size_t>(a * n + b)] = ring.add(a, b);
                    im->scalar_t[static_cast<std::size_t>(a * n + b)] = ring.mul(a, b);
                }
            }
            break;
        }
        case ModuleSpec::Kind::Quotient: {
            Bitset N = ideal_closure(ring, spec.gens);
            if (static_cast<int>(N.count()) == ring.order())
                throw MalformedSpec("module quotient by the whole ring is the zero module");
            int bn = ring.order();
            std::vector<int> members = N.elements();
            std::vector<int> proj(static_cast<std::size_t>(bn), -1);
            std::vector<int> reps;
            for (int x = 0; x < bn; ++x) {
                if (proj[static_cast<std::size_t>(x)] != -1) continue;
                int cls = static_cast<int>(reps.size());
                reps.push_back(x);
                for (int j : members) proj[static_cast<std::size_t>(ring.add(x, j))] = cls;
            }
            int n = static_cast<int>(reps.size());
            im->order = n;
            im->add_t.resize(static_cast<std::size_t>(n) * n);
            im->neg_t.resize(static_cast<std::size_t>(n));
            im->scalar_t.resize(static_cast<std::size_t>(ring.order()) * n);
            im->labels.resize(static_cast<std::size_t>(n));
            for (int a = 0; a < n; ++a) {
                int ra = reps[static_cast<std::size_t>(a)];
                im->neg_t[static_cast<std::size_t>(a)] = proj[static_cast<std::size_t>(ring.neg(ra))];
                im->labels[static_cast<std::size_t>(a)] = ring.label(ra) + "+N";
                for (int b = 0; b < n; ++b)
                    im->add_t[static_cast<std::size_t>(a * n + b)] =
                        proj[static_cast<std::size_t>(ring.add(ra, reps[static_cast<std::size_t>(b)]))];
            }
            for (int r = 0; r < ring.order(); ++r)
                for (int m = 0; m < n; ++m)
                    im->scalar_t[static_cast<std::size_t>(r * n + m)] =
                        proj[static_cast<std::size_t>(ring.mul(r, reps[static_cast<std::size_t>(m)]))];
            break;
        }
        case ModuleSpec::Kind::DirectSum: {
            std::vector<FiniteModule> parts;
            parts.reserve(spec.summands.size());
            long long total = 1;
            for (const auto& s : spec.summands) {
                parts.push_back(build_module(ring, s, opts));
                total *= parts.back().order();
                if (total > opts.max_order) throw OrderTooLarge("module direct sum exceeds build cap");
            }
            int arity = static_cast<int>(parts.size());
            int n = static_cast<int>(total);
            im->summands = parts;
            im->strides.assign(static_cast<std::size_t>(arity), 1);
            for (int i = arity - 2; i >= 0; --i)
                im->strides[static_cast<std::size_t>(i)] =
                    im->strides[static_cast<std::size_t>(i + 1)] * parts[static_cast<std::size_t>(i + 1)].order();
            auto decode = [&](int idx, std::vector<int>& comps) {
                for (int i = 0; i < arity; ++i) {
                    comps[static_cast<std::size_t>(i)] = idx / im->strides[static_cast<std::size_t>(i)];
                    idx %= im->strides[static_cast<std::size_t>(i)];
                }
            };
            auto encode = [&](const std::vector<int>& comps) {
                int idx = 0;
                for (int i = 0; i < arity; ++i) idx += comps[static_cast<std::size_t>(i)] * im->strides[static_cast<std::size_t>(i)];
                return idx;
            };
            im->order = n;
            im->add_t.resize(static_cast<std::size_t>(n) * n);
            im->neg_t.resize(static_cast<std::size_t>(n));
            im->scalar_t.resize(static_cast<std::size_t>(ring.order()) * n);
            im->labels.resize(static_cast<std::size_t>(n));
            std::vector<int> ca(static_cast<std::size_t>(arity)), cb(static_cast<std::size_t>(arity)), cr(static_cast<std::size_t>(arity));
            for (int a = 0; a < n; ++a) {
                decode(a, ca);
                std::vector<std::string> labels;
                for (int i = 0; i < arity; ++i) {
                    cr[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)].neg(ca[static_cast<std::size_t>(i)]);
                    labels.push_back(parts[static_cast<std::size_t>(i)].label(ca[static_cast<std::size_t>(i)]));
                }
                im->neg_t[static_cast<std::size_t>(a)] = encode(cr);
                im->labels[static_cast<std::size_t>(a)] = joined_label(labels);
                for (int b = 0; b < n; ++b) {
                    decode(b, cb);
                    for (int i = 0; i < arity; ++i)
                        cr[static_cast<std::size_t>(i)] =
                            parts[static_cast<std::size_t>(i)].add(ca[static_cast<std::size_t>(i)], cb[static_cast<std::size_t>(i)]);
                    im->add_t[static_cast<std::size_t>(a * n + b)] = encode(cr);
                }
            }
            for (int r = 0; r < ring.order(); ++r) {
                for (int m = 0; m < n; ++m) {
                    decode(m, ca);
                    for (int i = 0; i < arity; ++i)
                        cr[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)].scalar(r, ca[static_cast<std::size_t>(i)]);
                    im->scalar_t[static_cast<std::size_t>(r * n + m)] = encode(cr);
                }
            }
            break;
        }
    }

    FiniteModule mod;
    mod.impl_ = im;
    if (ring.order() <= opts.self_check_bound && mod.order() <= opts.self_check_bound)
        check_module_axioms(mod);
    return mod;
}

std::pair<FiniteRing, std::vector<int>> localize(const FiniteRing& ring,
                                                 const std::vector<int>& s_generators,
                                                 const BuildOptions& opts) {
    FiniteRing out = build_ring(RingSpec::localization(ring.spec(), s_generators), opts);
    return {out, out.localization_hom()};
}

FiniteRing idealize(const FiniteRing& ring, const FiniteModule& module, const BuildOptions& opts) {
    auto im = make_idealization(ring, module, opts.max_order);
    im->spec = RingSpec::idealization(ring.spec(), module.spec());
    im->key = im->spec.key();
    finalize_units(*im);
    FiniteRing out;
    out.impl_ = im;
    if (out.order() <= opts.self_check_bound) check_ring_axioms(out);
    return out;
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

void check_ring_axioms(const FiniteRing& R) {
    int n = R.order();
    auto fail = [&](const std::string& what) {
        throw AxiomViolation("ring axiom failed (" + what + ") in " + R.key());
    };
    if (R.one() == 0) fail("0 != 1");
    for (int a = 0; a < n; ++a) {
        if (R.add(a, 0) != a) fail("additive identity");
        if (R.add(a, R.neg(a)) != 0) fail("additive inverse");
        if (R.mul(a, R.one()) != a) fail("multiplicative identity");
        for (int b = 0; b < n; ++b) {
            if (R.add(a, b) != R.add(b, a)) fail("addition commutativity");
            if (R.mul(a, b) != R.mul(b, a)) fail("multiplication commutativity");
            for (int c = 0; c < n; ++c) {
                if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) fail("addition associativity");
                if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) fail("multiplication associativity");
                if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) fail("distributivity");
            }
        }
    }
}

void check_module_axioms(const FiniteModule& M) {
    const FiniteRing& R = M.ring();
    int n = M.order();
    int rn = R.order();
    auto fail = [&](const std::string& what) {
        throw AxiomViolation("module axiom failed (" + what + ") over " + R.key());
    };
    for (int a = 0; a < n; ++a) {
        if (M.add(a, 0) != a) fail("additive identity");
        if (M.add(a, M.neg(a)) != 0) fail("additive inverse");
        if (M.scalar(R.one(), a) != a) fail("unital action");
        for (int b = 0; b < n; ++b) {
            if (M.add(a, b) != M.add(b, a)) fail("addition commutativity");
            for (int c = 0; c < n; ++c)
                if (M.add(M.add(a, b), c) != M.add(a, M.add(b, c))) fail("addition associativity");
        }
    }
    for (int r = 0; r < rn; ++r) {
        for (int m = 0; m < n; ++m) {
            for (int m2 = 0; m2 < n; ++m2)
                if (M.scalar(r, M.add(m, m2)) != M.add(M.scalar(r, m), M.scalar(r, m2)))
                    fail("r(m+m') = rm+rm'");
            for (int r2 = 0; r2 < rn; ++r2) {
                if (M.scalar(R.add(r, r2), m) != M.add(M.scalar(r, m), M.scalar(r2, m)))
                    fail("(r+r')m = rm+r'm");
                if (M.scalar(R.mul(r, r2), m) != M.scalar(r, M.scalar(r2, m)))
                    fail("(rr')m = r(r'm)");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Von Neumann regularity and isomorphism testing
// ---------------------------------------------------------------------------

bool is_von_neumann_regular(const FiniteRing& R) {
    int n = R.order();
    for (int a = 0; a < n; ++a) {
        int a2 = R.mul(a, a);
        bool found = false;
        for (int x = 0; x < n; ++x) {
            if (R.mul(a2, x) == a) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

bool iso_backtrack(const FiniteRing& A, const FiniteRing& B, std::vector<int>& f,
                   std::vector<char>& used, int k,
                   const std::vector<int>& ord_a, const std::vector<int>& ord_b) {
    int n = A.order();
    if (k == n) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (f[static_cast<std::size_t>(A.add(i, j))] != B.add(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) return false;
                if (f[static_cast<std::size_t>(A.mul(i, j))] != B.mul(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) return false;
            }
        return true;
    }
    for (int img = 0; img < n; ++img) {
        if (used[static_cast<std::size_t>(img)]) continue;
        if (ord_a[static_cast<std::size_t>(k)] != ord_b[static_cast<std::size_t>(img)]) continue;
        if (k == 0 && img != 0) continue;
        if (k == A.one() && img != B.one()) continue;
        if (k != A.one() && img == B.one()) continue;
        // Elements are assigned in index order, so f[i] is known for i < k.
        // Constraints whose result index exceeds k are caught by the leaf pass.
        bool ok = true;
        for (int i = 0; i <= k && ok; ++i) {
            int fi = (i == k) ? img : f[static_cast<std::size_t>(i)];
            int s = A.add(i, k);
            if (s <= k) {
                int fs = (s == k) ? img : f[static_cast<std::size_t>(s)];
                if (B.add(fi, img) != fs) ok = false;
            }
            int p = A.mul(i, k);
            if (ok && p <= k) {
                int fp = (p == k) ? img : f[static_cast<std::size_t>(p)];
                if (B.mul(fi, img) != fp) ok = false;
            }
        }
        if (!ok) continue;
        f[static_cast<std::size_t>(k)] = img;
        used[static_cast<std::size_t>(img)] = 1;
        if (iso_backtrack(A, B, f, used, k + 1, ord_a, ord_b)) return true;
        f[static_cast<std::size_t>(k)] = -1;
        used[static_cast<std::size_t>(img)] = 0;
    }
    return false;
}

}  // namespace

bool ring_isomorphic(const FiniteRing& A, const FiniteRing& B, int bound) {
    if (A.order() != B.order()) return false;
    int n = A.order();
    if (n > bound) throw OrderTooLarge("isomorphism search bound exceeded");

    std::vector<int> ord_a(static_cast<std::size_t>(n)), ord_b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ord_a[static_cast<std::size_t>(i)] = A.additive_order(i);
        ord_b[static_cast<std::size_t>(i)] = B.additive_order(i);
    }
    std::vector<int> sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    std::vector<int> f(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    return iso_backtrack(A, B, f, used, 0, ord_a, ord_b);
}

}  // namespace absorblab
