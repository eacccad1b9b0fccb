#include <doctest.h>

#include <functional>
#include <map>

#include "fdgen/component.hpp"
#include "fdgen/error.hpp"
#include "golden.hpp"
#include "naive.hpp"

using namespace fdgen;
using golden::C;

namespace {

const ComponentCode& same_size(const ComponentSuccessor& s) {
  REQUIRE(std::holds_alternative<SameSize>(s));
  return std::get<SameSize>(s).code;
}

// Every sequence of trees (in any order) with total size at most `limit`.
void for_each_tree_sequence(Count limit, const std::function<void(const std::vector<TreeCode>&)>& visit) {
  std::vector<TreeCode> all;
  for (Count m = 1; m <= limit; ++m)
    for (const auto& s : naive::all_trees(m)) all.emplace_back(s);
  std::vector<TreeCode> seq;
  std::function<void(Count)> rec = [&](Count total) {
    if (!seq.empty()) visit(seq);
    for (const auto& t : all) {
      if (total + t.size() > limit) continue;
      seq.push_back(t);
      rec(total + t.size());
      seq.pop_back();
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("cycle") {
  CHECK(cycle(1) == C({{1}}));
  CHECK(cycle(2) == C({{1}, {1}}));
  CHECK(cycle(4) == C({{1}, {1}, {1}, {1}}));
  CHECK_THROWS_AS(cycle(0), InvalidInput);
}

TEST_CASE("is_canonical examples") {
  auto seq = [](golden::Trees ts) {
    std::vector<TreeCode> out;
    for (auto t : ts) out.emplace_back(std::vector<Count>(t));
    return out;
  };
  CHECK(is_canonical(seq({{1}, {2, 1}})));
  CHECK_FALSE(is_canonical(seq({{2, 1}, {1}})));
  CHECK(is_canonical(seq({{1}})));
  CHECK(is_canonical(seq({{2, 1}, {2, 1}})));
  CHECK_THROWS_AS(ComponentCode(seq({{2, 1}, {1}})), InvalidInput);
}

TEST_CASE("is_canonical agrees with the all-rotations check up to 7 vertices") {
  std::size_t n = 0;
  for_each_tree_sequence(7, [&](const std::vector<TreeCode>& seq) {
    ++n;
    CHECK(is_canonical(seq) == naive::is_min_rotation(seq));
    const auto rotated = naive::min_rotation(seq);
    const std::size_t start = least_tree_rotation(seq);
    std::vector<TreeCode> mine(seq.begin() + static_cast<std::ptrdiff_t>(start), seq.end());
    mine.insert(mine.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start));
    CHECK(mine == rotated);
  });
  CHECK(n == 413);  // sum over m <= 7 of sequences weighted by rooted-tree counts
}

TEST_CASE("compare_components") {
  CHECK(compare_components(C({{1}, {1}, {2, 1}}), C({{1}, {3, 1, 1}})) < 0);
  CHECK(compare_components(C({{1}}), C({{1}})) == 0);
  CHECK(compare_components(C({{1}, {3, 1, 1}}), C({{4, 1, 1, 1}})) < 0);
}

TEST_CASE("cunmerge") {
  CHECK(cunmerge(C({{4, 3, 2, 1}})) == C({{1}, {3, 2, 1}}));
  CHECK(cunmerge(C({{1}, {3, 2, 1}})) == C({{1}, {1}, {2, 1}}));
  CHECK(cunmerge(C({{2, 1}, {2, 1}})) == C({{1}, {1}, {2, 1}}));
  CHECK_THROWS_AS(cunmerge(cycle(3)), InvalidInput);
}

TEST_CASE("merges") {
  CHECK(merges(cycle(4)) ==
        std::vector<ComponentCode>{C({{1}, {1}, {2, 1}}), C({{1}, {3, 1, 1}}), C({{4, 1, 1, 1}})});
  CHECK(merges(C({{4, 1, 1, 1}})).empty());
  CHECK(merges(cycle(1)).empty());
}

TEST_CASE("merge sets do not share the cross-duplicate of two components") {
  const auto shared = C({{1}, {2, 1}, {3, 2, 1}});
  const auto a = C({{1}, {1}, {1}, {3, 2, 1}});
  const auto b = C({{1}, {2, 1}, {1}, {2, 1}});
  auto in = [](const ComponentCode& m, const ComponentCode& c) {
    auto ms = merges(c);
    return std::find(ms.begin(), ms.end(), m) != ms.end();
  };
  CHECK(in(shared, a) != in(shared, b));
  CHECK(cunmerge(shared) == a);
  CHECK(in(shared, a));
}

TEST_CASE("successor_component") {
  CHECK(same_size(successor_component(cycle(4))) == C({{1}, {1}, {2, 1}}));
  CHECK(same_size(successor_component(C({{4, 3, 2, 1}}))) == C({{2, 1}, {2, 1}}));
  CHECK(same_size(successor_component(C({{1}, {3, 1, 1}}))) == C({{4, 3, 1, 1}}));
  auto last = successor_component(C({{4, 1, 1, 1}}));
  REQUIRE(std::holds_alternative<GrewTo>(last));
  CHECK(std::get<GrewTo>(last).code == cycle(5));
  auto loop = successor_component(cycle(1));
  REQUIRE(std::holds_alternative<GrewTo>(loop));
  CHECK(std::get<GrewTo>(loop).code == cycle(2));
}

TEST_CASE("generate_components") {
  CHECK(generate_components(4) == golden::components4());
  CHECK(generate_components(1) == std::vector<ComponentCode>{cycle(1)});
  CHECK(generate_components(7).size() == 125);
}

TEST_CASE("streams resume after a given component") {
  const auto all = golden::components4();
  std::vector<ComponentCode> rest;
  for (auto s = ComponentStream::after(all[3]); !s.done(); s.advance()) rest.push_back(s.current());
  CHECK(rest == std::vector<ComponentCode>(all.begin() + 4, all.end()));
  CHECK(ComponentStream::after(all.back()).done());
}

TEST_CASE("structural properties of merges up to 7 vertices") {
  for (Count n = 1; n <= 7; ++n) {
    std::map<ComponentCode, ComponentCode> owner;
    for (const auto& c : generate_components(n)) {
      CHECK(is_canonical(c.trees()));
      for (const auto& m : merges(c)) {
        CHECK(is_canonical(m.trees()));
        CHECK(cunmerge(m) == c);
        CHECK(m.tree_count() < c.tree_count());
        CHECK(m.size() == c.size());
        CHECK(owner.emplace(m, c).second);  // disjoint across components
      }
    }
  }
}

TEST_CASE("the largest merge of a cycle is the star") {
  for (Count n = 2; n <= 10; ++n) {
    std::vector<Count> star(n, 1);
    star[0] = n;
    CHECK(merges(cycle(n)).back() == ComponentCode({TreeCode(star)}));
  }
}

TEST_CASE("the unmerge walk runs at most twice") {
  std::size_t worst = 0;
  for (Count n = 1; n <= 8; ++n)
    for (ComponentStream s(n); !s.done(); s.advance()) {
      SuccessorTrace trace;
      successor_component(s.current(), trace);
      worst = std::max(worst, trace.unmerge_steps);
    }
  CHECK(worst <= 2);
  CHECK(worst == 2);
}

TEST_CASE("generation_rank") {
  CHECK(generation_rank(cycle(4)) == 0);
  CHECK(generation_rank(C({{2, 1}, {2, 1}})) == 4);
  CHECK(generation_rank(C({{4, 1, 1, 1}})) == 8);
}

TEST_CASE("compare_generation_order matches replayed ranks up to 7 vertices") {
  for (Count n = 1; n <= 7; ++n) {
    const auto all = generate_components(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (n <= 5) CHECK(generation_rank(all[i]) == i);
      for (std::size_t j = 0; j < all.size(); ++j) CHECK((compare_generation_order(all[i], all[j]) <=> 0) == (i <=> j));
    }
  }
  CHECK(compare_generation_order(C({{4, 1, 1, 1}}), cycle(5)) < 0);
}
