#include "fdgen/canonicalizer.hpp"

#include <algorithm>
#include <string>

#include "fdgen/error.hpp"

namespace fdgen {

FunctionTable::FunctionTable(std::vector<Vertex> f) : f_(std::move(f)) {
  for (std::size_t i = 0; i < f_.size(); ++i)
    if (f_[i] >= f_.size())
      throw InvalidInput("entry " + std::to_string(i) + " is out of range");
}

Decomposition decompose(const FunctionTable& t) {
  enum class Color : unsigned char { unvisited, active, done };
  const std::size_t n = t.size();
  std::vector<Color> color(n, Color::unvisited);
  std::vector<bool> on_cycle(n, false);
  Decomposition d;
  d.predecessors.resize(n);

  std::vector<Vertex> path;
  for (Vertex start = 0; start < n; ++start) {
    if (color[start] != Color::unvisited) continue;
    path.clear();
    Vertex v = start;
    while (color[v] == Color::unvisited) {
      color[v] = Color::active;
      path.push_back(v);
      v = t[v];
    }
    if (color[v] == Color::active) {
      // v closes a new cycle: the suffix of the path starting at v.
      auto first = std::find(path.begin(), path.end(), v);
      RawComponent c{{first, path.end()}};
      std::rotate(c.cycle.begin(), std::min_element(c.cycle.begin(), c.cycle.end()), c.cycle.end());
      for (Vertex u : c.cycle) on_cycle[u] = true;
      d.components.push_back(std::move(c));
    }
    for (Vertex u : path) color[u] = Color::done;
  }
  for (Vertex u = 0; u < n; ++u)
    if (!on_cycle[u]) d.predecessors[t[u]].push_back(u);
  std::sort(d.components.begin(), d.components.end(),
            [](const RawComponent& a, const RawComponent& b) { return a.cycle.front() < b.cycle.front(); });
  return d;
}

namespace {

// Post-order over the in-tree of `root`, without recursion. Each finished
// child code is moved into its parent and released.
std::vector<Count> build_code(Vertex root, const Decomposition& d,
                              std::vector<std::vector<Count>>& scratch) {
  std::vector<Vertex> order{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex u : d.predecessors[order[i]]) order.push_back(u);

  std::vector<std::vector<Count>*> children;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    children.clear();
    Count size = 1;
    for (Vertex u : d.predecessors[v]) {
      children.push_back(&scratch[u]);
      size += scratch[u].front();
    }
    std::sort(children.begin(), children.end(),
              [](const auto* a, const auto* b) { return *a < *b; });
    std::vector<Count> code;
    code.reserve(size);
    code.push_back(size);
    for (auto* c : children) {
      code.insert(code.end(), c->begin(), c->end());
      std::vector<Count>().swap(*c);
    }
    scratch[v] = std::move(code);
  }
  return std::move(scratch[root]);
}

}  // namespace

TreeCode tree_code_of(Vertex root, const Decomposition& d) {
  std::vector<std::vector<Count>> scratch(d.predecessors.size());
  return TreeCode::unchecked(build_code(root, d, scratch));
}

ComponentCode component_code_of(std::vector<TreeCode> cycle_trees) {
  if (cycle_trees.empty()) throw InvalidInput("a component needs at least one tree");
  const std::size_t start = least_tree_rotation(cycle_trees);
  std::rotate(cycle_trees.begin(), cycle_trees.begin() + static_cast<std::ptrdiff_t>(start),
              cycle_trees.end());
  return ComponentCode::unchecked(std::move(cycle_trees));
}

DigraphCode canonicalize(const FunctionTable& t) {
  const Decomposition d = decompose(t);
  std::vector<std::vector<Count>> scratch(t.size());
  std::vector<ComponentCode> cs;
  cs.reserve(d.components.size());
  for (const RawComponent& raw : d.components) {
    std::vector<TreeCode> trees;
    trees.reserve(raw.cycle.size());
    for (Vertex v : raw.cycle) trees.push_back(TreeCode::unchecked(build_code(v, d, scratch)));
    cs.push_back(component_code_of(std::move(trees)));
  }
  std::sort(cs.begin(), cs.end(), [](const ComponentCode& a, const ComponentCode& b) {
    return a != b && compare_generation_order(a, b) < 0;
  });
  return DigraphCode::unchecked(std::move(cs));
}

bool isomorphic(const FunctionTable& a, const FunctionTable& b) {
  return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

}  // namespace fdgen
