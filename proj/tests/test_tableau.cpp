#include <doctest.h>

#include <map>

#include "kncross/enumerate.hpp"
#include "kncross/error.hpp"
#include "kncross/tableau.hpp"
#include "oracles.hpp"

using namespace kncross;

namespace {

VacillatingTableau tableau(std::vector<std::vector<int>> shapes, StepSet set) {
  VacillatingTableau t;
  for (auto& rows : shapes) t.shapes.emplace_back(std::move(rows));
  t.step_set = set;
  return t;
}

const HalfStep none = HalfStep::none();
HalfStep add(int h) { return HalfStep::add(h); }
HalfStep rem(int h) { return HalfStep::remove(h); }

// Tableaux counted by depth-first search over shapes, one square at a time.
long count_by_search(const std::vector<int>& rows, int steps_left, StepSet set) {
  int cells = 0;
  for (int r : rows) cells += r;
  if (cells > steps_left) return 0;  // each step pair removes at most one square
  if (steps_left == 0) return 1;
  auto moves = [](const std::vector<int>& r) {
    std::vector<std::pair<HalfStep, std::vector<int>>> out{{HalfStep::none(), r}};
    for (std::size_t h = 0; h <= r.size(); ++h) {
      const int len = h < r.size() ? r[h] : 0;
      if (h == 0 || r[h - 1] > len) {
        auto grown = r;
        if (h == r.size()) grown.push_back(1); else ++grown[h];
        out.emplace_back(HalfStep::add(static_cast<int>(h) + 1), grown);
      }
      if (h < r.size() && (h + 1 == r.size() || r[h + 1] < r[h])) {
        auto shrunk = r;
        if (--shrunk[h] == 0) shrunk.pop_back();
        out.emplace_back(HalfStep::remove(static_cast<int>(h) + 1), shrunk);
      }
    }
    return out;
  };
  long total = 0;
  for (const auto& [a, mid] : moves(rows)) {
    for (const auto& [b, end] : moves(mid)) {
      const bool legal = set == StepSet::partition
                             ? (a.is_none() || a.is_remove()) && (b.is_none() || b.is_add())
                             : (a.is_none() && (b.is_none() || b.is_add())) || (a.is_remove() && b.is_none()) ||
                                   (a.is_add() && b.is_remove());
      if (legal) total += count_by_search(end, steps_left - 1, set);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("shape basics") {
  const Shape s({2, 1});
  CHECK(s.cell_count() == 3);
  CHECK(s.can_add(1));
  CHECK(s.can_add(2));
  CHECK(s.can_add(3));
  CHECK_FALSE(s.can_add(4));
  CHECK(s.can_remove(1));
  CHECK(s.can_remove(2));
  CHECK(s.with_added(2) == Shape({2, 2}));
  CHECK(s.with_removed(2) == Shape({2}));
  CHECK_FALSE(Shape({1, 1}).can_remove(1));
  CHECK_THROWS_AS(Shape({1, 2}), Error);
  CHECK_THROWS_AS(Shape({1, 1}).with_added(2), Error);
}

TEST_CASE("validate_tableau") {
  CHECK(validate_tableau(tableau({{}, {}, {}}, StepSet::partition)).ok());
  CHECK(validate_tableau(tableau({{}, {1}, {}}, StepSet::braid)).ok());
  const TableauReport bad = validate_tableau(tableau({{}, {1}, {}}, StepSet::partition));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.violations.empty());
  CHECK_FALSE(validate_tableau(tableau({{}, {1}}, StepSet::braid)).ok());
  CHECK_FALSE(validate_tableau(tableau({{}, {1, 1}, {}}, StepSet::braid)).ok());
  VacillatingTableau bounded = tableau({{}, {}, {1}, {1}, {1, 1}, {1}, {1}, {}, {}}, StepSet::partition);
  CHECK(validate_tableau(bounded).ok());
  bounded.k_bound = 2;
  CHECK_FALSE(validate_tableau(bounded).ok());
}

TEST_CASE("step pairs") {
  CHECK(step_pairs(tableau({{}, {}, {}}, StepSet::partition)) == std::vector<StepPair>{{none, none}});
  CHECK(step_pairs(tableau({{}, {}, {1}, {}, {}}, StepSet::partition)) ==
        std::vector<StepPair>{{none, add(1)}, {rem(1), none}});
  CHECK(step_pairs(tableau({{}, {1}, {}}, StepSet::braid)) == std::vector<StepPair>{{add(1), rem(1)}});
}

TEST_CASE("tableau_from_step_pairs") {
  const std::vector<StepPair> single{{none, none}};
  CHECK(tableau_from_step_pairs(single, StepSet::partition) == tableau({{}, {}, {}}, StepSet::partition));
  const std::vector<StepPair> arc{{none, add(1)}, {rem(1), none}};
  CHECK(tableau_from_step_pairs(arc, StepSet::partition) == tableau({{}, {}, {1}, {}, {}}, StepSet::partition));
  const std::vector<StepPair> impossible{{rem(1), none}};
  CHECK_THROWS_AS(tableau_from_step_pairs(impossible, StepSet::partition), Error);
  const std::vector<StepPair> illegal{{add(1), rem(1)}};
  CHECK_THROWS_AS(tableau_from_step_pairs(illegal, StepSet::partition), Error);
}

TEST_CASE("tableau_to_diagram examples") {
  CHECK(partition_from_tableau(tableau({{}, {}, {}}, StepSet::partition)) == PartitionDiagram(1, {}));
  CHECK(braid_from_tableau(tableau({{}, {1}, {}}, StepSet::braid)) == BraidDiagram(1, {{1, 1}}));
  const std::vector<StepPair> arc{{none, add(1)}, {rem(1), none}};
  const auto t = tableau_from_step_pairs(arc, StepSet::partition);
  CHECK(partition_from_tableau(t) == PartitionDiagram(2, {{1, 2}}));
  CHECK(std::get<PartitionDiagram>(tableau_to_diagram(t)) == PartitionDiagram(2, {{1, 2}}));
  CHECK_THROWS_AS(partition_from_tableau(tableau({{}, {1}, {}}, StepSet::partition)), Error);
}

TEST_CASE("diagram_to_tableau examples") {
  CHECK(diagram_to_tableau(PartitionDiagram(1, {})) == tableau({{}, {}, {}}, StepSet::partition));
  CHECK(diagram_to_tableau(BraidDiagram(1, {{1, 1}})) == tableau({{}, {1}, {}}, StepSet::braid));
  const VacillatingTableau crossing = diagram_to_tableau(PartitionDiagram(4, {{1, 3}, {2, 4}}));
  CHECK(validate_tableau(crossing).ok());
  CHECK(max_row_count(crossing) == 2);
  CHECK(max_row_count(diagram_to_tableau(PartitionDiagram(4, {{1, 4}, {2, 3}}))) == 1);
  const VacillatingTableau braid = diagram_to_tableau(BraidDiagram(3, {{1, 2}, {2, 3}}));
  CHECK(step_pairs(braid) == std::vector<StepPair>{{none, add(1)}, {add(2), rem(2)}, {rem(1), none}});
}

TEST_CASE("insertion filling") {
  InsertionFilling f;
  CHECK(f.row_insert(3) == 1);
  CHECK(f.row_insert(1) == 2);
  CHECK(f.rows() == std::vector<std::vector<int>>{{1}, {3}});
  CHECK(f.row_insert(2) == 1);
  CHECK(f.rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(f.reverse_bump(2) == 2);
  CHECK(f.rows() == std::vector<std::vector<int>>{{1, 3}});
  CHECK(f.shape() == Shape({2}));
  f.place(2, 7);
  CHECK(f.erase_max(7) == 2);
  CHECK_THROWS_AS(f.erase_max(1), Error);
  CHECK_THROWS_AS(f.reverse_bump(3), Error);
}

TEST_CASE("round trips and the row bound, partitions n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for_each_set_partition(n, [&](const PartitionDiagram& p) {
      const VacillatingTableau t = diagram_to_tableau(p);
      REQUIRE(validate_tableau(t).ok());
      REQUIRE(partition_from_tableau(t) == p);
      REQUIRE(tableau_from_step_pairs(step_pairs(t), StepSet::partition) == t);
      const int crossing = oracle::crossing_by_subsets(p.arcs(), false);
      REQUIRE(max_row_count(t) == crossing);
      for (int k : {3, 4}) REQUIRE(is_k_noncrossing(p, k) == (max_row_count(t) < k));
      const auto pairs = step_pairs(t);
      REQUIRE((pairs.empty() || (pairs.front().odd.is_none() && pairs.back().even.is_none())));
    });
  }
}

TEST_CASE("round trips and the row bound, braids n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    oracle::for_each_raw_braid(n, [&](const std::vector<Arc>& arcs) {
      const BraidDiagram b(n, arcs);
      const VacillatingTableau t = diagram_to_tableau(b);
      REQUIRE(validate_tableau(t).ok());
      REQUIRE(braid_from_tableau(t) == b);
      REQUIRE(max_row_count(t) == oracle::crossing_by_subsets(arcs, true));
      for (int k : {3, 4}) REQUIRE(is_k_noncrossing(b, k) == (max_row_count(t) < k));
    });
  }
}

TEST_CASE("tableaux from diagrams are exactly the valid tableaux") {
  const auto bell = oracle::bell_triangle(8);
  for (int n = 0; n <= 8; ++n) CHECK(count_by_search({}, n, StepSet::partition) == bell[n]);
  for (int n = 0; n <= 6; ++n) {
    long braids = 0;
    oracle::for_each_raw_braid(n, [&](const std::vector<Arc>&) { ++braids; });
    CHECK(count_by_search({}, n, StepSet::braid) == braids);
  }
}

TEST_CASE("tableau text format") {
  const VacillatingTableau loop = tableau({{}, {1}, {}}, StepSet::braid);
  CHECK(to_string(loop) == "|1|");
  CHECK(parse_tableau("|1|", StepSet::braid) == loop);
  const VacillatingTableau t = diagram_to_tableau(PartitionDiagram(4, {{1, 3}, {2, 4}}));
  CHECK(parse_tableau(to_string(t), StepSet::partition) == t);
  CHECK(to_string(tableau({{}, {}, {1}, {1}, {1, 1}, {1}, {1}, {}, {}}, StepSet::partition)) == "||1|1|1,1|1|1||");
  CHECK_THROWS_AS(parse_tableau("|x|", StepSet::braid), Error);
  CHECK_THROWS_AS(parse_tableau("|1,2|", StepSet::braid), Error);
  CHECK(to_string(HalfStep::add(2)) == "+2");
  CHECK(to_string(StepPair{HalfStep::remove(1), HalfStep::none()}) == "(-1,0)");
}
