// Python surface: the main operations with plain-data inputs and outputs.
// Algebras cross the boundary as an opaque value class; everything else is
// lists, tuples and dicts so results serialize directly.

#include "odakit/errors.hpp"
#include "odakit/json_io.hpp"
#include "odakit/oda.hpp"
#include "odakit/oda_completion.hpp"
#include "odakit/representation.hpp"
#include "odakit/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace odakit;

namespace {

py::dict law_to_dict(const LawReport& law) {
    py::dict d;
    d["name"] = law.name;
    d["pass"] = law.pass;
    d["required"] = law.required;
    d["checked"] = law.checked;
    d["violations"] = law.violations;
    d["witness"] = law.witness;
    d["note"] = law.note;
    return d;
}

py::list laws_to_list(const std::vector<LawReport>& laws) {
    py::list out;
    for (const auto& law : laws) out.append(law_to_dict(law));
    return out;
}

py::dict suite_to_dict(const SuiteReport& rep) {
    py::dict d;
    d["name"] = rep.name;
    d["seed"] = rep.seed;
    d["trials"] = rep.trials;
    d["ok"] = rep.ok();
    d["properties"] = laws_to_list(rep.properties);
    return d;
}

std::vector<BinRel> rels_from_pairs(int base, const std::vector<std::vector<std::pair<int, int>>>& gens) {
    std::vector<BinRel> out;
    out.reserve(gens.size());
    for (const auto& pairs : gens) out.push_back(BinRel::from_pairs(base, pairs));
    return out;
}

UpSet upset_of(const AbstractODA& a, const std::vector<int>& gens) {
    for (int g : gens)
        if (g < 0 || g >= a.size())
            throw input_error("up-set generator " + std::to_string(g) + " out of range");
    return UpSet(a.poset(), gens);
}

} // namespace

PYBIND11_MODULE(_odakit, m) {
    m.doc() = "meet-completions of finite posets and ordered domain algebras";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<check_failure>(m, "CheckFailure", PyExc_RuntimeError);

    py::class_<AbstractODA>(m, "Algebra")
        .def_property_readonly("size", &AbstractODA::size)
        .def("name", &AbstractODA::name, py::arg("i"))
        .def_property_readonly("names",
                               [](const AbstractODA& a) {
                                   std::vector<std::string> out;
                                   for (int i = 0; i < a.size(); ++i) out.push_back(a.name(i));
                                   return out;
                               })
        .def("leq", &AbstractODA::leq, py::arg("a"), py::arg("b"))
        .def("comp", &AbstractODA::comp, py::arg("a"), py::arg("b"))
        .def("conv", &AbstractODA::conv, py::arg("a"))
        .def("dom", &AbstractODA::dom, py::arg("a"))
        .def("ran", &AbstractODA::ran, py::arg("a"))
        .def_property_readonly("zero", &AbstractODA::zero)
        .def_property_readonly("id", &AbstractODA::id)
        .def("__len__", &AbstractODA::size)
        .def("__repr__", [](const AbstractODA& a) {
            return "<odakit.Algebra with " + std::to_string(a.size()) + " elements>";
        });

    m.def("full_proper_oda", [](int base) { return full_proper_oda(base); }, py::arg("base"),
          "the algebra of all binary relations on a base of the given size");
    m.def(
        "generate_subalgebra",
        [](int base, const std::vector<std::vector<std::pair<int, int>>>& gens) {
            return generate_subalgebra(base, rels_from_pairs(base, gens));
        },
        py::arg("base"), py::arg("generators"),
        "subalgebra of the full proper algebra generated by the given relations (as pair lists)");
    m.def(
        "algebra_from_json_text",
        [](const std::string& text) {
            nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
            if (j.is_discarded()) throw input_error("not valid JSON");
            return algebra_from_json(j);
        },
        py::arg("text"));
    m.def(
        "algebra_to_json_text", [](const AbstractODA& a) { return algebra_to_json(a).dump(2); },
        py::arg("algebra"));

    m.def(
        "check_axioms", [](const AbstractODA& a) { return laws_to_list(check_axioms(a).laws); },
        py::arg("algebra"), "per-law report on the algebra itself");
    m.def(
        "check_completion_axioms",
        [](const AbstractODA& a) { return laws_to_list(check_completion_axioms(a).laws); },
        py::arg("algebra"), "per-law report on the completion by closed up-sets");

    m.def(
        "closed_antichains",
        [](const AbstractODA& a) {
            std::vector<std::vector<int>> out;
            for (const auto& s : closed_sets(a)) out.push_back(s.minimals());
            return out;
        },
        py::arg("algebra"), "minimal antichains of all closed up-sets, in canonical order");
    m.def(
        "count_up_sets",
        [](const AbstractODA& a) { return all_up_sets(a.poset()).size(); }, py::arg("algebra"));

    m.def(
        "complete_upset",
        [](const AbstractODA& a, const std::vector<int>& gens) {
            std::vector<UpSet> trace;
            UpSet closed = alg_closure(a, upset_of(a, gens), &trace);
            py::dict d;
            d["minimals"] = closed.minimals();
            std::vector<std::vector<int>> steps;
            for (const auto& s : trace) steps.push_back(s.minimals());
            d["steps"] = steps;
            d["iterations"] = trace.size() - 1;
            return d;
        },
        py::arg("algebra"), py::arg("generators"),
        "closure of the up-set generated by the given element indices, with the iterate trace");
    m.def(
        "comp_c",
        [](const AbstractODA& a, const std::vector<int>& x, const std::vector<int>& y) {
            return alg_comp_c(a, upset_of(a, x), upset_of(a, y)).minimals();
        },
        py::arg("algebra"), py::arg("x"), py::arg("y"));
    m.def(
        "dom_c",
        [](const AbstractODA& a, const std::vector<int>& x) {
            return alg_dom_c(a, upset_of(a, x)).minimals();
        },
        py::arg("algebra"), py::arg("x"));
    m.def(
        "ran_c",
        [](const AbstractODA& a, const std::vector<int>& x) {
            return alg_ran_c(a, upset_of(a, x)).minimals();
        },
        py::arg("algebra"), py::arg("x"));
    m.def(
        "conv_c",
        [](const AbstractODA& a, const std::vector<int>& x) {
            return alg_conv_c(a, upset_of(a, x)).minimals();
        },
        py::arg("algebra"), py::arg("x"));

    m.def(
        "rel_closure",
        [](int base, const std::vector<std::vector<std::pair<int, int>>>& gens) {
            RelClosureTrace trace;
            RelUpSet closed = rel_closure(RelUpSet(base, rels_from_pairs(base, gens)), &trace);
            py::dict d;
            std::vector<std::vector<std::pair<int, int>>> minimals;
            for (const auto& r : closed.minimals()) minimals.push_back(r.pairs());
            d["minimals"] = minimals;
            std::vector<std::string> steps;
            for (const auto& s : trace.steps) steps.push_back(s.to_string());
            d["steps"] = steps;
            d["iterations"] = trace.steps.size() - 1;
            return d;
        },
        py::arg("base"), py::arg("generators"),
        "relation-level closure of the up-set generated by the given relations");

    m.def("example_names", &example_names);
    m.def(
        "reproduce_example",
        [](const std::string& which) {
            ExampleReport rep = reproduce_example(which);
            py::dict d;
            d["name"] = rep.name;
            d["headline"] = rep.headline;
            d["ok"] = rep.ok();
            d["checks"] = laws_to_list(rep.checks);
            return d;
        },
        py::arg("which"));

    m.def(
        "represent",
        [](const AbstractODA& a, bool verify) {
            Representation rep = build_representation(a);
            py::dict d;
            std::vector<std::vector<int>> points;
            for (const auto& p : rep.points) points.push_back(p.minimals());
            d["points"] = points;
            py::dict image;
            for (int i = 0; i < a.size(); ++i)
                image[py::str(a.name(i))] = rep.image[static_cast<std::size_t>(i)].pairs();
            d["image"] = image;
            if (verify) {
                AxiomReport v = verify_representation(a, rep);
                d["ok"] = v.ok();
                d["laws"] = laws_to_list(v.laws);
            }
            return d;
        },
        py::arg("algebra"), py::arg("verify") = true,
        "representation over nondegenerate closed up-sets, optionally verified");

    m.def(
        "star_explore",
        [](const AbstractODA& a, long long budget) {
            StarStats stats = partial_star_explore(a, budget);
            py::dict d;
            d["triples"] = stats.triples;
            d["both_defined"] = stats.both_defined;
            d["definedness_mismatches"] = stats.definedness_mismatches;
            d["value_mismatches"] = stats.value_mismatches;
            d["exhausted"] = stats.exhausted;
            d["first_witness"] = stats.first_witness;
            return d;
        },
        py::arg("algebra"), py::arg("budget") = -1,
        "scan the partial composition for associativity mismatches");

    m.def(
        "run_correspondence_suite",
        [](std::uint64_t seed, int trials, int max_poset) {
            return suite_to_dict(run_correspondence_suite(seed, trials, max_poset));
        },
        py::arg("seed") = 1, py::arg("trials") = 100, py::arg("max_poset") = 6);
    m.def(
        "run_preservation_suite",
        [](std::uint64_t seed, int trials, int max_poset, int max_depth) {
            return suite_to_dict(run_preservation_suite(seed, trials, max_poset, max_depth));
        },
        py::arg("seed") = 1, py::arg("trials") = 200, py::arg("max_poset") = 4,
        py::arg("max_depth") = 3);
    m.def(
        "run_product_suite",
        [](std::uint64_t seed, int trials) { return suite_to_dict(run_product_suite(seed, trials)); },
        py::arg("seed") = 1, py::arg("trials") = 50);
}
