// odakit: completions of finite posets and ordered domain algebras.
//
// Every subcommand builds a RunReport and prints it as text or JSON.  Exit
// codes: 0 all asserted checks passed, 1 a check failed (or an internal
// verification tripped), 2 a resource guard refused the computation, 3 the
// input was malformed.

#include "odakit/errors.hpp"
#include "odakit/guards.hpp"
#include "odakit/json_io.hpp"
#include "odakit/oda.hpp"
#include "odakit/oda_completion.hpp"
#include "odakit/report.hpp"
#include "odakit/representation.hpp"
#include "odakit/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace odakit;

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size()) throw input_error("bad index '" + item + "' in list");
            out.push_back(value);
        } catch (const std::logic_error&) {
            throw input_error("bad index '" + item + "' in list");
        }
    }
    return out;
}

// Shared input resolution: an explicit algebra file, or a proper algebra over
// a base (full, or generated by relations from a file).
AbstractODA load_algebra(const std::string& input, int base, const std::string& generators) {
    if (!input.empty()) {
        if (base > 0 || !generators.empty())
            throw input_error("give either --input or --base/--generators, not both");
        return algebra_from_json(load_json_file(input));
    }
    if (!generators.empty()) {
        auto [file_base, gens] = generators_from_json(load_json_file(generators));
        if (base > 0 && base != file_base)
            throw input_error("--base " + std::to_string(base) + " disagrees with generator file base " +
                              std::to_string(file_base));
        return generate_subalgebra(file_base, gens);
    }
    if (base <= 0) throw input_error("one of --input or --base is required");
    return full_proper_oda(base);
}

RunReport run_check_axioms(const std::string& input, int base, const std::string& generators,
                           bool completion) {
    AbstractODA a = load_algebra(input, base, generators);
    RunReport r;
    r.command = completion ? "check-axioms --completion" : "check-axioms";
    r.add_fact("elements", std::to_string(a.size()));
    if (completion) {
        r.add_fact("closed-sets", std::to_string(closed_sets(a).size()));
        r.absorb(check_completion_axioms(a));
    } else {
        r.absorb(check_axioms(a));
    }
    return r;
}

RunReport run_complete(const std::string& input, const std::string& upset, int base,
                       const std::string& generators) {
    RunReport r;
    r.command = "complete";
    if (!input.empty()) {
        // algebra-level closure of the up-set generated by the listed elements
        if (!generators.empty())
            throw input_error("--generators applies to --base inputs, not --input");
        AbstractODA a = algebra_from_json(load_json_file(input));
        auto gens = parse_index_list(upset);
        for (int g : gens)
            if (g < 0 || g >= a.size())
                throw input_error("--upset index " + std::to_string(g) + " out of range");
        std::vector<UpSet> trace;
        UpSet closed = alg_closure(a, UpSet(a.poset(), gens), &trace);
        r.add_fact("elements", std::to_string(a.size()));
        for (std::size_t i = 0; i < trace.size(); ++i)
            r.add_fact("X" + std::to_string(i), trace[i].to_string());
        r.add_fact("iterations", std::to_string(trace.size() - 1));
        r.add_fact("already-closed", trace.size() == 1 ? "yes" : "no");
        r.add_fact("closure", closed.to_string());
        return r;
    }
    if (generators.empty()) throw input_error("complete needs --generators FILE or --input FILE");
    auto [file_base, gens] = generators_from_json(load_json_file(generators));
    if (base > 0 && base != file_base)
        throw input_error("--base " + std::to_string(base) + " disagrees with generator file base " +
                          std::to_string(file_base));
    RelClosureTrace trace;
    RelUpSet closed = rel_closure(RelUpSet(file_base, gens), &trace);
    r.add_fact("base", std::to_string(file_base));
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
        r.add_fact("X" + std::to_string(i), trace.steps[i].to_string());
    r.add_fact("iterations", std::to_string(trace.steps.size() - 1));
    r.add_fact("already-closed", trace.steps.size() == 1 ? "yes" : "no");
    r.add_fact("closure", closed.to_string());
    return r;
}

RunReport run_examples(const std::string& which) {
    RunReport r;
    r.command = "examples";
    if (which == "all") {
        for (const auto& name : example_names()) r.absorb(reproduce_example(name));
    } else {
        r.absorb(reproduce_example(which));
    }
    return r;
}

RunReport run_represent(const std::string& input, int base, const std::string& generators,
                        bool verify) {
    AbstractODA a = load_algebra(input, base, generators);
    Representation rep = build_representation(a);
    RunReport r;
    r.command = "represent";
    r.add_fact("elements", std::to_string(a.size()));
    r.add_fact("base-points", std::to_string(rep.point_count()));
    for (std::size_t i = 0; i < rep.points.size(); ++i)
        r.add_fact("point" + std::to_string(i), rep.points[i].to_string());
    for (int i = 0; i < a.size(); ++i) {
        std::string pairs = "{";
        bool first = true;
        for (auto [u, v] : rep.image[static_cast<std::size_t>(i)].pairs()) {
            if (!first) pairs += ",";
            first = false;
            pairs += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        }
        pairs += "}";
        r.add_fact("h(" + a.name(i) + ")", pairs);
    }
    if (verify) r.absorb(verify_representation(a, rep));
    return r;
}

RunReport run_star_explore(const std::string& input, int base, const std::string& generators,
                           long long budget) {
    AbstractODA a = load_algebra(input, base, generators);
    StarStats stats = partial_star_explore(a, budget);
    RunReport r;
    r.command = "star-explore";
    r.add_fact("elements", std::to_string(a.size()));
    r.add_fact("triples", std::to_string(stats.triples));
    r.add_fact("both-defined", std::to_string(stats.both_defined));
    r.add_fact("definedness-mismatches", std::to_string(stats.definedness_mismatches));
    r.add_fact("value-mismatches", std::to_string(stats.value_mismatches));
    r.add_fact("exhausted", stats.exhausted ? "yes" : "no");
    LawReport law;
    law.name = "kleene-associativity";
    law.required = false; // exploratory scan, not an assertion
    law.checked = stats.triples;
    law.violations = stats.definedness_mismatches + stats.value_mismatches;
    law.pass = law.violations == 0;
    law.witness = stats.first_witness;
    law.note = stats.exhausted ? "scan exhausted" : "scan stopped by budget";
    r.laws.push_back(std::move(law));
    return r;
}

RunReport run_subalgebra(int base, const std::string& generators, const std::string& output) {
    AbstractODA a = load_algebra("", base, generators);
    RunReport r;
    r.command = "subalgebra";
    r.add_fact("base", std::to_string(a.base().value_or(base)));
    r.add_fact("elements", std::to_string(a.size()));
    if (!output.empty()) {
        save_json_file(output, algebra_to_json(a));
        r.add_fact("output", output);
    }
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"meet-completions of finite posets and ordered domain algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    bool with_timing = false;
    app.add_flag("--json", as_json, "emit the report as JSON");
    app.add_flag("--timing", with_timing, "include wall time in the report");

    std::function<odakit::RunReport()> runner;

    // check-axioms
    {
        auto* cmd = app.add_subcommand("check-axioms", "check the axioms on an algebra, or on its completion");
        auto input = std::make_shared<std::string>();
        auto base = std::make_shared<int>(0);
        auto generators = std::make_shared<std::string>();
        auto completion = std::make_shared<bool>(false);
        cmd->add_option("--input", *input, "algebra JSON file");
        cmd->add_option("--base", *base, "base size of a proper algebra");
        cmd->add_option("--generators", *generators, "relation generator JSON file");
        cmd->add_flag("--completion", *completion, "check the laws on the completion instead");
        cmd->callback([=, &runner] {
            runner = [=] { return run_check_axioms(*input, *base, *generators, *completion); };
        });
    }

    // complete
    {
        auto* cmd = app.add_subcommand("complete", "close an up-set and print the iteration trace");
        auto input = std::make_shared<std::string>();
        auto upset = std::make_shared<std::string>();
        auto base = std::make_shared<int>(0);
        auto generators = std::make_shared<std::string>();
        cmd->add_option("--input", *input, "algebra JSON file (use with --upset)");
        cmd->add_option("--upset", *upset, "comma-separated element indices generating the up-set");
        cmd->add_option("--base", *base, "base size (cross-checked against the generator file)");
        cmd->add_option("--generators", *generators, "relation generator JSON file");
        cmd->callback([=, &runner] {
            runner = [=] { return run_complete(*input, *upset, *base, *generators); };
        });
    }

    // examples
    {
        auto* cmd = app.add_subcommand("examples", "reproduce the counterexamples");
        auto which = std::make_shared<std::string>("all");
        cmd->add_option("--which", *which, "d2, d6, assoc, product, or all")
            ->check(CLI::IsMember({"d2", "d6", "assoc", "product", "all"}));
        cmd->callback([=, &runner] { runner = [=] { return run_examples(*which); }; });
    }

    // preserve
    {
        auto* cmd = app.add_subcommand("preserve", "randomized inequality-preservation suite");
        auto seed = std::make_shared<std::uint64_t>(1);
        auto trials = std::make_shared<int>(200);
        auto max_poset = std::make_shared<int>(4);
        auto max_depth = std::make_shared<int>(3);
        cmd->add_option("--seed", *seed, "rng seed");
        cmd->add_option("--trials", *trials, "number of random instances");
        cmd->add_option("--max-poset", *max_poset, "largest poset size");
        cmd->add_option("--max-depth", *max_depth, "largest term depth");
        cmd->callback([=, &runner] {
            runner = [=] {
                odakit::RunReport r;
                r.command = "preserve";
                r.absorb(odakit::run_preservation_suite(*seed, *trials, *max_poset, *max_depth));
                return r;
            };
        });
    }

    // represent
    {
        auto* cmd = app.add_subcommand("represent", "build the finite representation over closed sets");
        auto input = std::make_shared<std::string>();
        auto base = std::make_shared<int>(0);
        auto generators = std::make_shared<std::string>();
        auto verify = std::make_shared<bool>(false);
        cmd->add_option("--input", *input, "algebra JSON file");
        cmd->add_option("--base", *base, "base size of a proper algebra");
        cmd->add_option("--generators", *generators, "relation generator JSON file");
        cmd->add_flag("--verify", *verify, "verify faithfulness and preservation clauses");
        cmd->callback([=, &runner] {
            runner = [=] { return run_represent(*input, *base, *generators, *verify); };
        });
    }

    // correspondence-check
    {
        auto* cmd = app.add_subcommand("correspondence-check",
                                       "randomized closure/completion round-trip suite");
        auto seed = std::make_shared<std::uint64_t>(1);
        auto trials = std::make_shared<int>(100);
        auto max_poset = std::make_shared<int>(6);
        cmd->add_option("--seed", *seed, "rng seed");
        cmd->add_option("--trials", *trials, "number of random instances");
        cmd->add_option("--max-poset", *max_poset, "largest poset size");
        cmd->callback([=, &runner] {
            runner = [=] {
                odakit::RunReport r;
                r.command = "correspondence-check";
                r.absorb(odakit::run_correspondence_suite(*seed, *trials, *max_poset));
                return r;
            };
        });
    }

    // star-explore
    {
        auto* cmd = app.add_subcommand("star-explore",
                                       "scan the partial composition for associativity mismatches");
        auto input = std::make_shared<std::string>();
        auto base = std::make_shared<int>(0);
        auto generators = std::make_shared<std::string>();
        auto budget = std::make_shared<long long>(-1);
        cmd->add_option("--input", *input, "algebra JSON file");
        cmd->add_option("--base", *base, "base size of a proper algebra");
        cmd->add_option("--generators", *generators, "relation generator JSON file");
        cmd->add_option("--budget", *budget, "max triples to scan (-1 = no limit)");
        cmd->callback([=, &runner] {
            runner = [=] { return run_star_explore(*input, *base, *generators, *budget); };
        });
    }

    // subalgebra
    {
        auto* cmd = app.add_subcommand("subalgebra", "generate a proper subalgebra and save it");
        auto base = std::make_shared<int>(0);
        auto generators = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        cmd->add_option("--base", *base, "base size of the ambient proper algebra");
        cmd->add_option("--generators", *generators, "relation generator JSON file");
        cmd->add_option("--output,-o", *output, "write the algebra as JSON here");
        cmd->callback([=, &runner] { runner = [=] { return run_subalgebra(*base, *generators, *output); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        auto start = std::chrono::steady_clock::now();
        odakit::RunReport report = runner();
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (as_json ? odakit::to_json_text(report, with_timing)
                              : odakit::to_text(report, with_timing));
        return report.ok ? 0 : 1;
    } catch (const odakit::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const odakit::resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const odakit::check_failure& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
