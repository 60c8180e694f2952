// fibercert: twisted Alexander polynomials of finitely presented groups
// twisted by finite quotients, with monicness + degree certification of
// fibering over the circle.
//
// Exit codes: 0 success / ConsistentUpTo, 2 invalid input, 3 NotFibered,
// 4 Degenerate or Truncated, 1 internal error.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "fibercert/corpus.hpp"
#include "fibercert/pd.hpp"
#include "fibercert/report.hpp"

using namespace fibercert;

namespace {

struct CommonOpts {
    std::string input;
    std::string group_name;
    int max_order = 12;
    std::vector<long> primes = {2, 3, 5};
    long norm = -1;
    long time_limit_ms = 0;
    int jobs = 1;
    std::string format = "text";
    unsigned long seed = 1;
};

struct LoadedInput {
    Presentation pres;
    PhiClass phi;
    ManifoldMeta meta;
};

LoadedInput load_input(const std::string& path) {
    LoadedInput li;
    std::filesystem::path p(path);
    if (p.extension() == ".pd" || p.extension() == ".json") {
        WirtingerResult w = wirtinger(load_pd_file(path));
        li.pres = std::move(w.pres);
        li.phi = std::move(w.phi);
        if (li.pres.label.empty())
            li.pres.label = p.stem().string();
    } else {
        PresentationFile pf = load_presentation_file(path);
        li.pres = std::move(pf.pres);
        li.phi = pf.phi ? *pf.phi : infer_phi(li.pres);
        li.meta.b3 = pf.b3;
        li.meta.closed = pf.closed;
        if (li.pres.label.empty())
            li.pres.label = p.stem().string();
    }
    li.meta.label = li.pres.label;
    return li;
}

Budget make_budget(const CommonOpts& o) {
    Budget b;
    b.max_order = o.max_order;
    b.primes = o.primes;
    b.time_limit_ms = o.time_limit_ms;
    b.jobs = o.jobs;
    b.validate();
    return b;
}

std::vector<Hom> homs_for_group(const LoadedInput& li, const std::string& name,
                                bool surjective_only) {
    if (name == "trivial" || name == "Z/1")
        return {trivial_hom(li.pres)};
    // named lookups always search the full catalog
    for (const auto& g : catalog(64))
        if (g->name == name)
            return enumerate_homs(li.pres, g, surjective_only);
    throw InputError("group '" + name + "' not in the catalog (orders 1..64)");
}

int cmd_compute(const CommonOpts& o) {
    LoadedInput li = load_input(o.input);
    Budget budget = make_budget(o);

    std::vector<Hom> homs;
    if (!o.group_name.empty()) {
        homs = homs_for_group(li, o.group_name, true);
        if (homs.empty()) {
            std::cerr << "no surjections onto " << o.group_name << "\n";
            return 0;
        }
    } else {
        homs.push_back(trivial_hom(li.pres));
    }

    OrderedJson results = OrderedJson::array();
    for (const Hom& hom : homs) {
        TwistedSetup setup{li.pres, li.phi, hom, ring_z(), li.meta};
        DeltaOutcome out = compute_delta(setup);
        AlexPolys polys;
        if (out.ok()) {
            polys = *out.polys;
        } else {
            // Fall back to the first configured prime so the user still
            // sees a value, clearly tagged with its ring.
            if (budget.primes.empty())
                throw InputError(out.unavailable_reason);
            TwistedSetup fp = setup;
            fp.ring = ring_fp(budget.primes[0]);
            polys = *compute_delta(fp).polys;
            if (o.format == "text")
                std::cout << "note: " << out.unavailable_reason << "\n";
        }
        if (o.format == "json") {
            results.push_back(alex_to_json(polys, hom));
        } else {
            std::cout << alex_to_text(polys, hom);
            for (long p : budget.primes) {
                if (!out.ok())
                    break;
                ModPConsistency c = delta_mod_p_consistency(setup, p);
                std::cout << "  mod " << p << ": " << (c.equal ? "agrees" : "differs")
                          << (c.gate ? "" : " (extreme coefficient divisible: degree drop expected)")
                          << "\n";
            }
        }
    }
    if (o.format == "json")
        std::cout << results.dump(2) << "\n";
    return 0;
}

int cmd_certify(const CommonOpts& o) {
    LoadedInput li = load_input(o.input);
    if (o.norm >= 0)
        li.meta.norm_hint = o.norm;
    CertReport report = certify(li.pres, li.phi, li.meta, make_budget(o));
    if (o.format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    return verdict_exit_code(report);
}

int cmd_homs(const CommonOpts& o, bool surjective_only) {
    LoadedInput li = load_input(o.input);
    if (o.group_name.empty())
        throw InputError("homs needs --group");
    std::vector<Hom> homs = homs_for_group(li, o.group_name, surjective_only);
    OrderedJson arr = OrderedJson::array();
    for (const Hom& h : homs) {
        OrderedJson j;
        j["group"] = h.target->name;
        std::vector<std::string> names;
        for (int x : h.images)
            names.push_back(h.target->element_names[static_cast<std::size_t>(x)]);
        j["images"] = names;
        j["surjective"] = h.surjective;
        arr.push_back(j);
        if (o.format != "json") {
            std::cout << h.target->name << ": [";
            for (std::size_t i = 0; i < names.size(); ++i)
                std::cout << (i ? ", " : "") << names[i];
            std::cout << "]" << (h.surjective ? " onto" : "") << "\n";
        }
    }
    if (o.format == "json")
        std::cout << arr.dump(2) << "\n";
    else
        std::cout << homs.size() << " homomorphism(s) up to conjugation\n";
    return 0;
}

int cmd_corpus(const CommonOpts& o) {
    auto entries = load_corpus(o.input);
    std::string base_dir = std::filesystem::path(o.input).parent_path().string();
    CorpusSummary summary = run_corpus(entries, make_budget(o), base_dir);
    if (o.format == "json")
        std::cout << corpus_to_json(summary).dump(2) << "\n";
    else
        std::cout << corpus_to_text(summary);
    if (summary.any_soundness_violation)
        return 3;
    if (summary.any_error)
        return 4;
    return 0;
}

int cmd_oracle(const CommonOpts& o, int count, int rank, int word_len) {
    OracleConfig config;
    config.count = count;
    config.max_rank = rank;
    config.max_image_len = word_len;
    config.seed = o.seed;
    config.budget = make_budget(o);
    OracleSummary summary = run_oracle(config);
    if (o.format == "json") {
        OrderedJson j;
        j["seed"] = config.seed;
        j["count"] = config.count;
        j["consistent"] = summary.consistent_count;
        j["not_fibered"] = summary.not_fibered_count;
        OrderedJson arr = OrderedJson::array();
        for (const auto& inst : summary.instances) {
            OrderedJson ij;
            ij["rank"] = inst.rank;
            ij["verdict"] = verdict_name(inst.report.verdict.type);
            ij["quotients"] = inst.report.verdict.quotient_count;
            arr.push_back(ij);
        }
        j["instances"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& inst : summary.instances)
            std::cout << inst.report.label << " (rank " << inst.rank
                      << "): " << verdict_name(inst.report.verdict.type) << " after "
                      << inst.report.verdict.quotient_count << " quotients\n";
        std::cout << summary.consistent_count << "/" << summary.instances.size()
                  << " consistent; " << summary.not_fibered_count << " soundness violations\n";
    }
    return summary.not_fibered_count > 0 ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Alexander polynomial fiberedness certification"};
    app.require_subcommand(1);

    CommonOpts o;
    int oracle_count = 50, oracle_rank = 3, oracle_len = 6;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("input", o.input, "input file (.pd/.pres/corpus .json)")->required();
        cmd->add_option("--max-order", o.max_order, "largest quotient order")
            ->check(CLI::Range(1, 64));
        cmd->add_option("--primes", o.primes, "cross-check primes")->delimiter(',');
        cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 64));
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--time-limit-ms", o.time_limit_ms, "certification time budget");
    };

    CLI::App* compute = app.add_subcommand("compute", "twisted Alexander polynomials");
    add_common(compute, true);
    compute->add_option("--group", o.group_name, "catalog group name (default: trivial)");

    CLI::App* certify_cmd = app.add_subcommand("certify", "fiberedness certification");
    add_common(certify_cmd, true);
    certify_cmd->add_option("--norm", o.norm, "Thurston norm override (otherwise inferred)");

    CLI::App* homs_cmd = app.add_subcommand("homs", "list homomorphisms to a finite group");
    add_common(homs_cmd, true);
    homs_cmd->add_option("--group", o.group_name, "catalog group name")->required();
    bool all_homs = false;
    homs_cmd->add_flag("--all", all_homs, "include non-surjective homomorphisms");

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "run a corpus file, print summary table");
    add_common(corpus_cmd, true);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "random mapping-torus soundness run");
    add_common(oracle_cmd, false);
    oracle_cmd->add_option("--count", oracle_count, "number of instances");
    oracle_cmd->add_option("--rank", oracle_rank, "maximum fiber rank");
    oracle_cmd->add_option("--word-len", oracle_len, "maximum monodromy image length");
    oracle_cmd->add_option("--seed", o.seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return cmd_compute(o);
        if (certify_cmd->parsed())
            return cmd_certify(o);
        if (homs_cmd->parsed())
            return cmd_homs(o, !all_homs);
        if (corpus_cmd->parsed())
            return cmd_corpus(o);
        if (oracle_cmd->parsed())
            return cmd_oracle(o, oracle_count, oracle_rank, oracle_len);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
