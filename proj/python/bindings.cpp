#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdgen/canonicalizer.hpp"
#include "fdgen/error.hpp"
#include "fdgen/oracle.hpp"
#include "fdgen/text_format.hpp"

namespace py = pybind11;
using namespace fdgen;

// Codes cross the boundary as nested lists of ints, matching the bracket
// notation: tree list[int], component list[list[int]], digraph
// list[list[list[int]]].
namespace {

using TreeList = std::vector<Count>;
using ComponentList = std::vector<TreeList>;
using DigraphList = std::vector<ComponentList>;

TreeList to_list(const TreeCode& t) { return {t.seq().begin(), t.seq().end()}; }

ComponentList to_list(const ComponentCode& c) {
  ComponentList out;
  for (const auto& t : c.trees()) out.push_back(to_list(t));
  return out;
}

DigraphList to_list(const DigraphCode& g) {
  DigraphList out;
  for (const auto& c : g.components()) out.push_back(to_list(c));
  return out;
}

std::vector<TreeCode> to_trees(const ComponentList& trees) {
  std::vector<TreeCode> out;
  for (const auto& t : trees) out.emplace_back(t);
  return out;
}

ComponentCode to_component(const ComponentList& trees) { return ComponentCode(to_trees(trees)); }

DigraphCode to_digraph(const DigraphList& g) {
  std::vector<ComponentCode> cs;
  for (const auto& c : g) cs.push_back(to_component(c));
  return DigraphCode(std::move(cs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Isomorphism-free generation of functional digraphs with polynomial delay.";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("is_valid_tree_code", [](const std::vector<std::int64_t>& s) { return is_valid_tree_code(s); });
  m.def("merge", [](const ComponentList& ts) { return to_list(merge(to_trees(ts))); },
        "Attach trees[1:] as immediate subtrees of the trivial trees[0].");
  m.def("unmerge", [](const TreeList& t) {
    ComponentList out;
    for (const auto& s : unmerge(TreeCode(t))) out.push_back(to_list(s));
    return out;
  });

  m.def("cycle", [](Count n) { return to_list(cycle(n)); });
  m.def("is_canonical", [](const ComponentList& trees) { return is_canonical(to_trees(trees)); });
  m.def("cunmerge", [](const ComponentList& c) { return to_list(cunmerge(to_component(c))); });
  m.def("merges", [](const ComponentList& c) {
    std::vector<ComponentList> out;
    for (const auto& x : merges(to_component(c))) out.push_back(to_list(x));
    return out;
  });
  m.def(
      "successor_component",
      [](const ComponentList& c) {
        auto next = successor_component(to_component(c));
        if (auto* same = std::get_if<SameSize>(&next)) return py::make_tuple(to_list(same->code), false);
        return py::make_tuple(to_list(std::get<GrewTo>(next).code), true);
      },
      "Returns (successor, grew); grew is True when the successor is the next cycle size.");
  m.def("generate_components", [](Count n) {
    std::vector<ComponentList> out;
    for (ComponentStream s(n); !s.done(); s.advance()) out.push_back(to_list(s.current()));
    return out;
  });
  m.def("generation_rank", [](const ComponentList& c) { return generation_rank(to_component(c)); });

  m.def("first_partition", &first_partition);
  m.def("successor_partition", &successor_partition);

  m.def("successor_digraph", [](const DigraphList& g) { return to_list(successor_digraph(to_digraph(g))); });
  m.def("generate_digraphs", [](Count n) {
    std::vector<DigraphList> out;
    for (DigraphStream s(n); !s.done(); s.advance()) out.push_back(to_list(s.current()));
    return out;
  });
  m.def("compare_digraphs", [](const DigraphList& a, const DigraphList& b) {
    auto o = compare_digraphs(to_digraph(a), to_digraph(b));
    return o < 0 ? -1 : (o > 0 ? 1 : 0);
  });

  m.def("canonicalize", [](const std::vector<Vertex>& f) { return to_list(canonicalize(FunctionTable(f))); });
  m.def("isomorphic", [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return isomorphic(FunctionTable(a), FunctionTable(b));
  });
  m.def("realize", [](const DigraphList& g) { return oracle::realize(to_digraph(g)).values(); });

  m.def("render", [](const DigraphList& g) { return render(to_digraph(g)); });
  m.def("parse_digraph", [](const std::string& s) { return to_list(parse_digraph(s)); });
}
