#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "kncross/enumerate.hpp"
#include "kncross/error.hpp"
#include "oracles.hpp"

using namespace kncross;

namespace {

// Independent counts (separate brute-force script), n = 0..9.
const std::map<std::pair<ClassTag, int>, std::vector<long>> kGolden{
    {{ClassTag::partitions_k, 3}, {1, 1, 2, 5, 15, 52, 202, 859, 3930, 19095}},
    {{ClassTag::two_regular_k, 3}, {1, 1, 1, 2, 5, 15, 51, 191, 772, 3320}},
    {{ClassTag::braids_k, 3}, {1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566}},
    {{ClassTag::braids_k_no_isolated, 3}, {1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032}},
    {{ClassTag::partitions_k, 4}, {1, 1, 2, 5, 15, 52, 203, 877, 4139, 21119}},
    {{ClassTag::two_regular_k, 4}, {1, 1, 1, 2, 5, 15, 52, 203, 876, 4120}},
    {{ClassTag::braids_k, 4}, {1, 2, 5, 15, 52, 203, 877, 4139, 21119, 115495}},
    {{ClassTag::braids_k_no_isolated, 4}, {1, 1, 2, 5, 15, 52, 203, 876, 4120, 20883}},
};

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("restricted growth strings") {
  std::vector<std::vector<int>> seen;
  for_each_restricted_growth_string(3, [&](std::span<const int> a) { seen.emplace_back(a.begin(), a.end()); });
  CHECK(seen == std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  int empty = 0;
  for_each_restricted_growth_string(0, [&](std::span<const int> a) { empty += a.empty(); });
  CHECK(empty == 1);
  const std::vector<int> prefix{0, 1};
  int with_prefix = 0;
  for_each_restricted_growth_string(4, prefix, [&](std::span<const int> a) {
    CHECK(a[0] == 0);
    CHECK(a[1] == 1);
    ++with_prefix;
  });
  CHECK(with_prefix == 10);  // 3 choices then up to 4
}

TEST_CASE("partition_from_rgs") {
  const std::vector<int> rgs{0, 1, 0, 1, 0};
  CHECK(partition_from_rgs(rgs) == PartitionDiagram(5, {{1, 3}, {3, 5}, {2, 4}}));
}

TEST_CASE("set partition stream") {
  const auto bell = oracle::bell_triangle(9);
  CHECK(set_partitions(0).size() == 1);
  CHECK(set_partitions(3).size() == 5);
  CHECK(set_partitions(5).size() == 52);
  for (int n = 0; n <= 9; ++n) {
    const auto all = set_partitions(n);
    CHECK(all.size() == bell[n]);
    CHECK(std::set(all.begin(), all.end()).size() == all.size());
    CHECK(bell_number(n) == bell[n]);
  }
}

TEST_CASE("filtered streams") {
  CHECK(partitions_k(5, 3).size() == 52);
  CHECK(two_regular_k(2, 3).size() == 1);
  CHECK(braids_no_isolated(1, 3) == std::vector<BraidDiagram>{BraidDiagram(1, {{1, 1}})});
  CHECK(braids(1, 3).size() == 2);
  CHECK(braids_no_isolated(4, 3).size() == 15);
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : two_regular_k(n, 3)) CHECK((is_two_regular(p) && is_k_noncrossing(p, 3)));
    const auto bs = braids(n, 3);
    CHECK(std::set(bs.begin(), bs.end()).size() == bs.size());
  }
}

TEST_CASE("braid streams equal raw-arc enumeration") {
  for (int k : {3, 4}) {
    for (int n = 0; n <= 6; ++n) {
      std::set<BraidDiagram> all, dagger;
      oracle::for_each_raw_braid(n, [&](const std::vector<Arc>& arcs) {
        if (oracle::crossing_by_subsets(arcs, true) >= k) return;
        const BraidDiagram b(n, arcs);
        all.insert(b);
        if (!has_isolated_points(b)) dagger.insert(b);
      });
      const auto bs = braids(n, k);
      const auto ds = braids_no_isolated(n, k);
      CHECK(std::set(bs.begin(), bs.end()) == all);
      CHECK(std::set(ds.begin(), ds.end()) == dagger);
      CHECK(bs.size() == all.size());
      CHECK(ds.size() == dagger.size());
    }
  }
}

TEST_CASE("brute-force counts match the independent table") {
  for (const auto& [key, values] : kGolden) {
    const CountTable t = count_table(key.first, key.second, 9);
    REQUIRE(t.entries.size() == values.size());
    for (int n = 0; n <= 9; ++n) CHECK(t.entries.at(n) == values[n]);
  }
}

TEST_CASE("count identities") {
  for (int k : {3, 4}) {
    const auto p = count_table(ClassTag::partitions_k, k, 9).entries;
    const auto p2 = count_table(ClassTag::two_regular_k, k, 9).entries;
    const auto b = count_table(ClassTag::braids_k, k, 8).entries;
    const auto d = count_table(ClassTag::braids_k_no_isolated, k, 8).entries;
    const auto bell = oracle::bell_triangle(9);
    for (int n = 1; n <= 9; ++n) {
      CHECK(p.at(n) == b.at(n - 1));
      CHECK(p2.at(n) == d.at(n - 1));
    }
    for (int n = 0; n < 2 * k && n <= 9; ++n) CHECK(p.at(n) == bell[n]);
  }
}

TEST_CASE("count_table routes and guards") {
  CHECK(count_table(ClassTag::braids_k_no_isolated, 3, 1).entries.at(1) == 1);
  CHECK(count_table(ClassTag::partitions_k, 3, 5).entries.at(5) == 52);
  const auto shifted = count_table(ClassTag::two_regular_k, 3, 12, Route::closed_form).entries;
  const auto dagger = count_table(ClassTag::braids_k_no_isolated, 3, 11, Route::recurrence).entries;
  for (int n = 2; n <= 12; ++n) CHECK(shifted.at(n) == dagger.at(n - 1));
  CHECK(count_table(ClassTag::braids_k_no_isolated, 3, 3, Route::kernel_ct).route == Route::kernel_ct);

  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::validation;
  };
  CHECK(code([] { count_table(ClassTag::partitions_k, 3, 13); }) == ErrorCode::range_guard);
  CHECK(code([] { brute_count(ClassTag::partitions_k, 3, 13); }) == ErrorCode::range_guard);
  CHECK(code([] { count_table(ClassTag::partitions_k, 3, 5, Route::closed_form); }) == ErrorCode::precondition);
  CHECK(code([] { count_table(ClassTag::braids_k_no_isolated, 4, 5, Route::closed_form); }) ==
        ErrorCode::precondition);
  CHECK(code([] { count_table(ClassTag::partitions_k, 1, 5); }) == ErrorCode::precondition);
}

TEST_CASE("sharded counting agrees with sequential counting") {
  for (ClassTag tag : {ClassTag::partitions_k, ClassTag::two_regular_k, ClassTag::braids_k,
                       ClassTag::braids_k_no_isolated}) {
    for (int n : {0, 3, 9}) CHECK(brute_count(tag, 3, n, 4) == brute_count(tag, 3, n, 1));
  }
}

TEST_CASE("class and route spellings") {
  for (ClassTag tag : {ClassTag::partitions_k, ClassTag::two_regular_k, ClassTag::braids_k,
                       ClassTag::braids_k_no_isolated}) {
    CHECK(parse_class_tag(to_string(tag)) == tag);
  }
  for (Route r : {Route::brute, Route::closed_form, Route::recurrence, Route::kernel_ct, Route::walk_dp}) {
    CHECK(parse_route(to_string(r)) == r);
  }
  CHECK(parse_class_tag("B_k_dagger") == ClassTag::braids_k_no_isolated);
  CHECK_THROWS_AS(parse_class_tag("trees"), Error);
  CHECK_THROWS_AS(parse_route("guess"), Error);
}

TEST_CASE("committed golden count files") {
  for (int k : {3, 4}) {
    const auto rows = read_csv(std::string(KNCROSS_TESTDATA) + "/counts_k" + std::to_string(k) + ".csv");
    REQUIRE(rows.front() == std::vector<std::string>{"class", "k", "route", "n", "count"});
    std::map<ClassTag, CountTable> tables;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& r = rows[i];
      REQUIRE(r.size() == 5);
      const ClassTag tag = parse_class_tag(r[0]);
      CHECK(std::stoi(r[1]) == k);
      CHECK(parse_route(r[2]) == Route::brute);
      if (!tables.count(tag)) tables[tag] = count_table(tag, k, 10, Route::brute, 4);
      CHECK(tables[tag].entries.at(std::stoi(r[3])).get_str() == r[4]);
    }
  }
}
