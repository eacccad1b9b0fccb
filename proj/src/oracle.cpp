#include "fdgen/oracle.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "fdgen/error.hpp"

namespace fdgen::oracle {

namespace {

void check_guard(Count n) {
  if (n < 1 || n > max_size)
    throw InvalidInput("oracle size must be in 1.." + std::to_string(max_size) + ", got " +
                       std::to_string(n));
}

// Odometer over entries [from, n) with the leading entries held fixed.
template <typename Visit>
void odometer(std::vector<Vertex>& f, std::size_t from, Visit&& visit) {
  const std::size_t n = f.size();
  std::fill(f.begin() + static_cast<std::ptrdiff_t>(from), f.end(), 0);
  while (true) {
    visit(f);
    std::size_t i = n;
    while (true) {
      if (i == from) return;
      --i;
      if (++f[i] < n) break;
      f[i] = 0;
    }
  }
}

}  // namespace

void enumerate_tables(Count n, const std::function<void(const FunctionTable&)>& visit) {
  check_guard(n);
  std::vector<Vertex> f(n);
  odometer(f, 0, [&](const std::vector<Vertex>& v) { visit(FunctionTable(v)); });
}

Classification classify(Count n, unsigned threads) {
  check_guard(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, n);

  std::vector<Classification> parts(threads);
  auto work = [n, threads](unsigned id, Classification& out) {
    std::vector<Vertex> f(n);
    for (Vertex head = id; head < n; head += threads) {
      f[0] = head;
      odometer(f, 1, [&](const std::vector<Vertex>& v) {
        DigraphCode g = canonicalize(FunctionTable(v));
        if (g.components().size() == 1) out.components.insert(g.components().front());
        out.digraphs.insert(std::move(g));
      });
    }
  };

  if (threads == 1) {
    work(0, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id, std::ref(parts[id]));
    for (auto& t : pool) t.join();
  }

  Classification all = std::move(parts[0]);
  for (unsigned id = 1; id < threads; ++id) {
    all.digraphs.merge(parts[id].digraphs);
    all.components.merge(parts[id].components);
  }
  return all;
}

FunctionTable realize(const DigraphCode& g) {
  std::vector<Vertex> f(g.size());
  Vertex next = 0;
  for (const ComponentCode& c : g.components()) {
    std::vector<Vertex> roots;
    for (const TreeCode& t : c.trees()) {
      // Preorder: each code entry opens one vertex whose parent is the
      // innermost vertex whose span still covers the position.
      auto seq = t.seq();
      std::vector<std::pair<Vertex, std::size_t>> open;  // vertex, end position
      for (std::size_t pos = 0; pos < seq.size(); ++pos) {
        while (!open.empty() && open.back().second <= pos) open.pop_back();
        const Vertex v = next++;
        if (open.empty())
          roots.push_back(v);
        else
          f[v] = open.back().first;
        open.emplace_back(v, pos + seq[pos]);
      }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) f[roots[i]] = roots[(i + 1) % roots.size()];
  }
  return FunctionTable(std::move(f));
}

}  // namespace fdgen::oracle
