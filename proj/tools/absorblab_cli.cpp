// absorblab: construct finite commutative rings, enumerate ideal lattices,
// classify ideals against the phi-primality hierarchy, and verify the
// hierarchy theorems over a generated corpus of small rings.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "absorblab/cache.hpp"
#include "absorblab/report.hpp"
#include "absorblab/search.hpp"
#include "absorblab/theorems.hpp"

using namespace absorblab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

struct CliConfig {
    std::string cache_dir;
    int order_cap = 64;
    int n_max = 4;
    int jobs = 1;
    std::string format = "json";
    std::string corpus = "default";
};

json read_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw MalformedSpec("cannot open file: " + arg.substr(1));
        json j;
        in >> j;
        return j;
    }
    return json::parse(arg);
}

RingSpec parse_ring_spec(const std::string& arg) { return RingSpec::from_json(read_json_arg(arg)); }

std::vector<FiniteRing> load_corpus(const CliConfig& cfg) {
    if (cfg.corpus == "default")
        return build_corpus(CorpusSpec::defaults(), cfg.order_cap);
    return build_corpus(CorpusSpec::from_json(read_json_arg(cfg.corpus)), cfg.order_cap);
}

BuildOptions build_options(const CliConfig& cfg) {
    BuildOptions opts;
    opts.max_order = 256;
    opts.self_check_bound = std::min(64, cfg.order_cap);
    return opts;
}

int cmd_ring(const CliConfig& cfg, const std::string& spec_arg) {
    FiniteRing R = build_ring(parse_ring_spec(spec_arg), build_options(cfg));

    std::vector<int> units, idempotents;
    for (int a = 0; a < R.order(); ++a) {
        if (R.is_unit(a)) units.push_back(a);
        if (R.mul(a, a) == a) idempotents.push_back(a);
    }
    std::vector<Ideal> lattice = cached_enumerate_ideals(R, cfg.cache_dir, cfg.order_cap);
    Ideal jac = jacobson_radical(R);

    json out{{"ring", json::parse(R.key())},
             {"ring_hash", content_hash(R.key())},
             {"order", R.order()},
             {"units", units},
             {"idempotents", idempotents},
             {"jacobson_radical", jac.elements()},
             {"von_neumann_regular", is_von_neumann_regular(R)},
             {"ideal_count", lattice.size()}};
    if (cfg.format == "text") {
        std::cout << "ring " << content_hash(R.key()) << "  order " << R.order() << "\n"
                  << "  units: " << units.size() << "  idempotents: " << idempotents.size()
                  << "\n  Jac(R): {";
        for (std::size_t i = 0; i < jac.elements().size(); ++i)
            std::cout << (i ? "," : "") << jac.elements()[i];
        std::cout << "}\n  von Neumann regular: " << (out.at("von_neumann_regular").get<bool>() ? "yes" : "no")
                  << "\n  ideals: " << lattice.size() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_ideals(const CliConfig& cfg, const std::string& spec_arg) {
    FiniteRing R = build_ring(parse_ring_spec(spec_arg), build_options(cfg));
    std::vector<Ideal> lattice = cached_enumerate_ideals(R, cfg.cache_dir, cfg.order_cap);
    json ideals = json::array();
    for (const Ideal& I : lattice) ideals.push_back(I.elements());
    json out{{"ring", json::parse(R.key())},
             {"ring_hash", content_hash(R.key())},
             {"count", lattice.size()},
             {"ideals", ideals}};
    if (cfg.format == "text") {
        std::cout << lattice.size() << " ideals of " << content_hash(R.key()) << "\n";
        for (const Ideal& I : lattice) {
            std::cout << "  {";
            std::vector<int> e = I.elements();
            for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
            std::cout << "}\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_classify(const CliConfig& cfg, const std::string& spec_arg,
                 const std::vector<int>& gens, const std::vector<std::string>& phi_args) {
    FiniteRing R = build_ring(parse_ring_spec(spec_arg), build_options(cfg));
    Ideal I = span(R, gens);
    if (!I.proper(R)) throw ImproperIdeal("the generated ideal is the whole ring");

    if (!phi_args.empty()) {
        // Custom phi list: evaluate the five predicates per supplied phi.
        json matrix = json::object();
        for (Property p : kAllProperties) matrix[property_name(p)] = json::object();
        Bitset radI = radical(R, I).members();
        for (const std::string& arg : phi_args) {
            PhiSpec phi = PhiSpec::from_json(read_json_arg(arg));
            PhiValue phiI = phi_eval(phi, R, I);
            for (Property p : kAllProperties)
                matrix[property_name(p)][phi.name()] =
                    pred::dispatch(p, R, I.members(), phiI, radI).holds;
        }
        json out{{"ring", json::parse(R.key())},
                 {"ring_hash", content_hash(R.key())},
                 {"ideal", I.elements()},
                 {"matrix", matrix}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    if (cfg.format == "dot") {
        std::cout << render_dot(R, I, cfg.n_max);
        return kExitOk;
    }
    ClassificationReport rep = classify(R, I, cfg.n_max);
    if (cfg.format == "csv") {
        std::cout << classification_csv(rep);
    } else if (cfg.format == "text") {
        std::cout << "ideal {";
        std::vector<int> e = I.elements();
        for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
        std::cout << "} of " << content_hash(R.key()) << "\n";
        for (const auto& [p, row] : rep.matrix) {
            std::cout << "  " << property_name(p) << ":";
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << " " << rep.ladder[j].name() << "=" << (row[j] ? "T" : "f");
            std::cout << "\n";
        }
    } else {
        std::cout << rep.to_json().dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::vector<std::string> ids, bool all) {
    if (all) ids = all_theorem_ids();
    if (ids.empty()) throw UnknownTheorem("no theorem ids given (use --all)");
    for (const auto& id : ids)
        if (!known_theorem(id)) throw UnknownTheorem("unknown theorem id: " + id);

    std::vector<FiniteRing> corpus = load_corpus(cfg);
    VerifyOptions opts;
    opts.n_max = cfg.n_max;
    opts.jobs = cfg.jobs;
    opts.order_cap = cfg.order_cap;
    std::vector<VerificationReport> reports = verify_many(ids, corpus, opts);

    bool violated = false;
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& r : reports) out.push_back(r.to_json());
        std::cout << out.dump(2) << "\n";
        for (const auto& r : reports) violated = violated || !r.verified();
    } else {
        for (const auto& r : reports) {
            std::cout << r.theorem_id << ": " << (r.verified() ? "verified" : "VIOLATED") << "  checked="
                      << r.instances_checked << " non_vacuous=" << r.non_vacuous()
                      << " vacuous=" << r.vacuous_instances
                      << " violations=" << r.violations.size() << "\n";
            violated = violated || !r.verified();
        }
    }
    return violated ? kExitViolation : kExitOk;
}

int cmd_search(const CliConfig& cfg, const std::string& expr, std::int64_t budget) {
    std::vector<FiniteRing> corpus = load_corpus(cfg);
    SearchResult r = search_counterexample(expr, corpus, budget, cfg.order_cap);
    std::cout << r.to_json().dump(2) << "\n";
    return r.status == SearchStatus::BudgetExhausted ? kExitViolation : kExitOk;
}

int cmd_corpus(const CliConfig& cfg) {
    std::vector<FiniteRing> corpus = load_corpus(cfg);
    if (cfg.format == "text") {
        for (const FiniteRing& r : corpus)
            std::cout << content_hash(r.key()) << "  order " << r.order() << "  " << r.key() << "\n";
        std::cout << corpus.size() << " rings\n";
    } else {
        json out = json::array();
        for (const FiniteRing& r : corpus)
            out.push_back(json{{"ring", json::parse(r.key())}, {"order", r.order()}});
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

void apply_config_file(const std::string& path, CLI::App& app, CliConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw MalformedSpec("cannot open config file: " + path);
    json j;
    in >> j;
    auto unset = [&](const char* flag) { return app.count(flag) == 0; };
    if (j.contains("cache_dir") && unset("--cache-dir")) cfg.cache_dir = j.at("cache_dir");
    if (j.contains("order_cap") && unset("--order-cap")) cfg.order_cap = j.at("order_cap");
    if (j.contains("n_max") && unset("--n-max")) cfg.n_max = j.at("n_max");
    if (j.contains("jobs") && unset("--jobs")) cfg.jobs = j.at("jobs");
    if (j.contains("format") && unset("--format")) cfg.format = j.at("format");
    if (j.contains("corpus") && unset("--corpus")) cfg.corpus = j.at("corpus").dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite commutative ring workbench"};
    app.require_subcommand(1);

    CliConfig cfg;
    if (const char* env = std::getenv("ABSORBLAB_CACHE")) cfg.cache_dir = env;

    std::string config_file;
    app.add_option("--config", config_file, "JSON config file with defaults");
    app.add_option("--cache-dir", cfg.cache_dir, "lattice cache directory");
    app.add_option("--order-cap", cfg.order_cap, "global order bound")->check(CLI::Range(2, 256));
    app.add_option("--n-max", cfg.n_max, "standard ladder depth")->check(CLI::Range(2, 16));
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--format", cfg.format, "output format: json, csv, dot, text")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    app.add_option("--corpus", cfg.corpus, "corpus: 'default', inline JSON, or @file");

    std::string spec_arg;
    std::vector<int> gens;
    std::vector<std::string> phi_args;
    std::vector<std::string> theorem_ids;
    bool verify_all = false;
    std::string expr;
    std::int64_t budget = 1000000;

    CLI::App* ring = app.add_subcommand("ring", "summarize a ring");
    ring->fallthrough();
    ring->add_option("--spec", spec_arg, "ring spec JSON or @file")->required();

    CLI::App* ideals = app.add_subcommand("ideals", "enumerate the ideal lattice");
    ideals->fallthrough();
    ideals->add_option("--spec", spec_arg, "ring spec JSON or @file")->required();

    CLI::App* classify = app.add_subcommand("classify", "classify an ideal");
    classify->fallthrough();
    classify->add_option("--spec", spec_arg, "ring spec JSON or @file")->required();
    classify->add_option("--gens", gens, "ideal generators (element indices)")
        ->delimiter(',')
        ->required();
    classify->add_option("--phi", phi_args, "phi spec JSON (repeatable; overrides the ladder)");

    CLI::App* verify = app.add_subcommand("verify", "verify theorems over a corpus");
    verify->fallthrough();
    verify->add_option("ids", theorem_ids, "theorem ids (e.g. T-PC)");
    verify->add_flag("--all", verify_all, "verify every theorem");

    CLI::App* search = app.add_subcommand("search", "search the corpus for a counterexample");
    search->fallthrough();
    search->add_option("expr", expr, "predicate expression, e.g. \"weakly-2AQP and not 2AQP\"")
        ->required();
    search->add_option("--budget", budget, "max (ring, ideal) instances to try");

    CLI::App* corpus = app.add_subcommand("corpus", "list the corpus rings");
    corpus->fallthrough();
    (void)corpus;

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_file.empty()) apply_config_file(config_file, app, cfg);
        if (ring->parsed()) return cmd_ring(cfg, spec_arg);
        if (ideals->parsed()) return cmd_ideals(cfg, spec_arg);
        if (classify->parsed()) return cmd_classify(cfg, spec_arg, gens, phi_args);
        if (verify->parsed()) return cmd_verify(cfg, theorem_ids, verify_all);
        if (search->parsed()) return cmd_search(cfg, expr, budget);
        if (corpus->parsed()) return cmd_corpus(cfg);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
