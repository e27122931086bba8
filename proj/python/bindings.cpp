// Python surface: thin wrappers over the core types plus list-based
// conveniences where exact rationals or bit masks would be awkward.

#include <pybind11/chrono.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hindlab/colorings.hpp"
#include "hindlab/groups.hpp"
#include "hindlab/ordinals.hpp"
#include "hindlab/search.hpp"
#include "hindlab/setcore.hpp"
#include "hindlab/words.hpp"

namespace py = pybind11;
using namespace hindlab;

namespace {

FinSet set_from_list(Universe u, const std::vector<int>& elements) {
  return FinSet::from_elements(u, elements);
}

GroupElem elem_from_tuples(
    const std::vector<std::tuple<Coord, long long, long long, std::string>>& entries) {
  std::vector<std::pair<Coord, CircleValue>> pairs;
  for (const auto& [coord, num, den, tag] : entries) {
    if (tag != "torsion" && tag != "torsion_free")
      throw std::invalid_argument("tag must be torsion or torsion_free");
    pairs.emplace_back(coord, CircleValue::of(Rational(num, den),
                                              tag == "torsion"
                                                  ? ComponentTag::torsion
                                                  : ComponentTag::torsion_free));
  }
  return GroupElem::from_entries(pairs);
}

std::vector<std::tuple<Coord, long long, long long, std::string>> elem_to_tuples(
    const GroupElem& g) {
  std::vector<std::tuple<Coord, long long, long long, std::string>> out;
  for (const auto& [coord, value] : g.entries())
    out.emplace_back(coord, value.value().numerator(), value.value().denominator(),
                     value.tag() == ComponentTag::torsion ? "torsion" : "torsion_free");
  return out;
}

}  // namespace

PYBIND11_MODULE(_hindlab, m) {
  m.doc() = "Finite-union/finite-sum partition experiments";

  py::enum_<Color>(m, "Color")
      .value("zero", Color::zero)
      .value("one", Color::one);

  py::class_<Universe>(m, "Universe")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &Universe::size)
      .def("__eq__", [](const Universe& a, const Universe& b) { return a == b; })
      .def("__repr__",
           [](const Universe& u) { return "Universe(" + std::to_string(u.size()) + ")"; });

  py::class_<FinSet>(m, "FinSet")
      .def(py::init(&set_from_list), py::arg("universe"), py::arg("elements"))
      .def_property_readonly("elements", &FinSet::elements)
      .def_property_readonly("bits", &FinSet::bits)
      .def("__len__", &FinSet::size)
      .def("__contains__", &FinSet::contains)
      .def("__eq__", [](const FinSet& a, const FinSet& b) { return a == b; })
      .def("__repr__", &FinSet::str);

  py::class_<DisjointFamily>(m, "DisjointFamily")
      .def(py::init(
               [](std::vector<FinSet> members) { return DisjointFamily::of(std::move(members)); }),
           py::arg("members"))
      .def_property_readonly("members",
                             [](const DisjointFamily& f) { return f.members(); })
      .def_property_readonly("member_sizes", &DisjointFamily::member_sizes)
      .def("__len__", &DisjointFamily::size)
      .def("__eq__",
           [](const DisjointFamily& a, const DisjointFamily& b) { return a == b; });

  m.def("disjoint_union", &disjoint_union);
  m.def("fu_closure", &fu_closure);
  m.def("log_block_of_count", &log_block_of_count, py::arg("count"));
  m.def("log_block", &log_block);
  m.def("binary_support", &binary_support, py::arg("m"), py::arg("universe"));
  m.def("from_binary_support", &from_binary_support);

  py::class_<SetColoring>(m, "SetColoring")
      .def_static("log_parity", &SetColoring::log_parity)
      .def_static("seeded_random", &SetColoring::seeded_random, py::arg("seed"))
      .def("color", &SetColoring::color)
      .def_property_readonly("permutation_invariant", &SetColoring::permutation_invariant)
      .def("__repr__", &SetColoring::describe);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("max_size", &SearchResult::max_size)
      .def_readonly("witness", &SearchResult::witness)
      .def_readonly("witness_color", &SearchResult::witness_color)
      .def_readonly("nodes_expanded", &SearchResult::nodes_expanded)
      .def_readonly("exhausted", &SearchResult::exhausted);

  m.def(
      "max_mono_fu_family",
      [](int n, const SetColoring& coloring, std::optional<int> target,
         int max_family_size, std::optional<int> time_budget_ms, int threads) {
        SearchConfig cfg{Universe(n), coloring, target, max_family_size,
                         time_budget_ms
                             ? std::optional<std::chrono::milliseconds>(
                                   std::chrono::milliseconds(*time_budget_ms))
                             : std::nullopt,
                         threads};
        return max_mono_fu_family(cfg);
      },
      py::arg("n"), py::arg("coloring"), py::arg("target") = std::nullopt,
      py::arg("max_family_size") = 20, py::arg("time_budget_ms") = std::nullopt,
      py::arg("threads") = 1);
  m.def("brute_force_oracle", &brute_force_oracle, py::arg("universe"),
        py::arg("coloring"), py::arg("target"));
  m.def("verify_block_injectivity", &verify_block_injectivity);
  m.def("min_universe_for_mono_pair", &min_universe_for_mono_pair, py::arg("max_n"));

  py::class_<GroupElem>(m, "GroupElem")
      .def(py::init(&elem_from_tuples), py::arg("entries"))
      .def_property_readonly("entries", &elem_to_tuples)
      .def_property_readonly("support", &GroupElem::support)
      .def_property_readonly("is_identity", &GroupElem::is_identity)
      .def("__eq__", [](const GroupElem& a, const GroupElem& b) { return a == b; })
      .def("__repr__", &GroupElem::str);

  m.def("group_add", [](const GroupElem& a, const GroupElem& b) { return add(a, b); });
  m.def("fs_closure",
        [](const std::vector<GroupElem>& items) { return fs_closure(items); });

  py::class_<DeltaSystem>(m, "DeltaSystem")
      .def_readonly("root", &DeltaSystem::root)
      .def_readonly("family", &DeltaSystem::family)
      .def_static("of", &DeltaSystem::of, py::arg("root"), py::arg("family"));

  m.def(
      "find_delta_system",
      [](const std::vector<GroupElem>& family, std::size_t min_size) {
        return find_delta_system(family, min_size);
      },
      py::arg("family"), py::arg("min_size"));

  py::class_<SumSubsystem>(m, "SumSubsystem")
      .def_readonly("elements", &SumSubsystem::elements)
      .def_readonly("blocks", &SumSubsystem::blocks)
      .def_readonly("root", &SumSubsystem::root);

  m.def("sum_subsystem_refine", &sum_subsystem_refine);
  m.def("verify_support_additivity", [](const std::vector<GroupElem>& items) {
    return verify_support_additivity(items);
  });
  m.def("merged_support_size", &merged_support_size, py::arg("l"), py::arg("root_size"),
        py::arg("count"));

  py::class_<Word>(m, "Word")
      .def_static("parse", &Word::parse, py::arg("text"))
      .def_static("positive",
                  [](const std::vector<std::uint32_t>& gens) { return Word::positive(gens); })
      .def_property_readonly("length", [](const Word& w) { return w.length(); })
      .def_property_readonly("support", &Word::support)
      .def("inverse", &Word::inverse)
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__repr__", &Word::str)
      .def("__str__", &Word::str);

  m.def("concat_reduce", &concat_reduce);
  m.def("fp_closure", [](const std::vector<Word>& ws) { return fp_closure(ws); });
  m.def("product_length_formula",
        [](const std::vector<std::uint64_t>& lengths, std::uint64_t n) {
          return product_length_formula(lengths, n);
        });

  py::class_<FixedEndsFamily>(m, "FixedEndsFamily")
      .def_static("of", &FixedEndsFamily::of, py::arg("z"), py::arg("w"),
                  py::arg("middles"))
      .def_property_readonly("members",
                             [](const FixedEndsFamily& f) { return f.members(); })
      .def_property_readonly("junction_cancellation",
                             &FixedEndsFamily::junction_cancellation);

  py::class_<CnfOrdinal>(m, "CnfOrdinal")
      .def_static("parse", &CnfOrdinal::parse, py::arg("text"))
      .def_static("finite", &CnfOrdinal::finite, py::arg("value"))
      .def_static("omega_power", &CnfOrdinal::omega_power, py::arg("exponent"))
      .def_property_readonly("is_zero", &CnfOrdinal::is_zero)
      .def("__eq__", [](const CnfOrdinal& a, const CnfOrdinal& b) { return a == b; })
      .def("__lt__", [](const CnfOrdinal& a, const CnfOrdinal& b) { return a < b; })
      .def("__repr__", &CnfOrdinal::str)
      .def("__str__", &CnfOrdinal::str);

  m.def("ord_add", &ord_add);
  m.def("times_omega", &times_omega);
  m.def("absorbs", &absorbs, py::arg("gamma"), py::arg("delta"));
  m.def("enumerate_below", &enumerate_below, py::arg("bound"), py::arg("coeff_cap") = 8);
  m.def(
      "greedy_mono_sequence",
      [](const std::function<Color(const CnfOrdinal&)>& coloring, const CnfOrdinal& bound,
         std::size_t target_length, std::uint64_t coeff_cap) {
        return greedy_mono_sequence(coloring, bound, target_length, coeff_cap);
      },
      py::arg("coloring"), py::arg("bound"), py::arg("target_length"),
      py::arg("coeff_cap") = 8);
  m.def("seeded_ordinal_coloring", &seeded_ordinal_coloring, py::arg("seed"));
  m.def("coeff_sum_parity_coloring", &coeff_sum_parity_coloring);
  m.def("fp_equals_set",
        [](const std::vector<CnfOrdinal>& seq) { return fp_equals_set(seq); });
  m.def("max_semigroup_fs",
        [](const std::vector<CnfOrdinal>& items) { return max_semigroup_fs(items); });

  m.def("every_coloring_has_mono_pair_naive", &every_coloring_has_mono_pair_naive);
  m.def("every_coloring_has_mono_pair_bitmask", &every_coloring_has_mono_pair_bitmask);

#ifdef HINDLAB_VERSION
  m.attr("__version__") = HINDLAB_VERSION;
#endif
}
