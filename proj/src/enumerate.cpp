#include "kncross/enumerate.hpp"
#include "kncross/error.hpp"
#include "kncross/walks.hpp"

#include <future>
#include <string>
#include <thread>

namespace kncross {

PartitionDiagram partition_from_rgs(std::span<const int> rgs) {
  const int n = static_cast<int>(rgs.size());
  std::vector<int> last(n, 0);  // last vertex seen in each block, 0 if none
  std::vector<Arc> arcs;
  for (int v = 1; v <= n; ++v) {
    const int block = rgs[v - 1];
    if (block < 0 || block >= n) throw Error(ErrorCode::validation, "restricted growth string out of range");
    if (last[block] != 0) arcs.push_back({last[block], v});
    last[block] = v;
  }
  return PartitionDiagram(n, std::move(arcs));
}

std::vector<PartitionDiagram> set_partitions(int n) {
  std::vector<PartitionDiagram> out;
  for_each_set_partition(n, [&](const PartitionDiagram& p) { out.push_back(p); });
  return out;
}

std::vector<PartitionDiagram> partitions_k(int n, int k) {
  std::vector<PartitionDiagram> out;
  for_each_partition_k(n, k, [&](const PartitionDiagram& p) { out.push_back(p); });
  return out;
}

std::vector<PartitionDiagram> two_regular_k(int n, int k) {
  std::vector<PartitionDiagram> out;
  for_each_two_regular_k(n, k, [&](const PartitionDiagram& p) { out.push_back(p); });
  return out;
}

std::vector<BraidDiagram> braids(int n, int k) {
  std::vector<BraidDiagram> out;
  for_each_braid(n, k, [&](const BraidDiagram& b) { out.push_back(b); });
  return out;
}

std::vector<BraidDiagram> braids_no_isolated(int n, int k) {
  std::vector<BraidDiagram> out;
  for_each_braid_no_isolated(n, k, [&](const BraidDiagram& b) { out.push_back(b); });
  return out;
}

BigInt bell_number(int n) {
  if (n < 0) throw Error(ErrorCode::precondition, "Bell number of a negative size");
  std::vector<BigInt> bell{1};
  for (int m = 0; m < n; ++m) {
    BigInt next = 0;
    for (int j = 0; j <= m; ++j) next += binomial(m, j) * bell[j];
    bell.push_back(next);
  }
  return bell[n];
}

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::partitions_k: return "partitions";
    case ClassTag::two_regular_k: return "2regular";
    case ClassTag::braids_k: return "braids";
    case ClassTag::braids_k_no_isolated: return "braids-noiso";
  }
  return "?";
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::brute: return "brute";
    case Route::closed_form: return "closed";
    case Route::recurrence: return "recurrence";
    case Route::kernel_ct: return "kernel";
    case Route::walk_dp: return "walk";
  }
  return "?";
}

ClassTag parse_class_tag(std::string_view text) {
  if (text == "partitions" || text == "P_k") return ClassTag::partitions_k;
  if (text == "2regular" || text == "P_k2") return ClassTag::two_regular_k;
  if (text == "braids" || text == "B_k") return ClassTag::braids_k;
  if (text == "braids-noiso" || text == "B_k_dagger") return ClassTag::braids_k_no_isolated;
  throw Error(ErrorCode::parse, "unknown class '" + std::string(text) + "'");
}

Route parse_route(std::string_view text) {
  if (text == "brute") return Route::brute;
  if (text == "closed" || text == "closed_form") return Route::closed_form;
  if (text == "recurrence") return Route::recurrence;
  if (text == "kernel" || text == "kernel_ct") return Route::kernel_ct;
  if (text == "walk" || text == "walk_dp") return Route::walk_dp;
  throw Error(ErrorCode::parse, "unknown route '" + std::string(text) + "'");
}

namespace {

// Weight of one set partition of [n] in the count for a class.
BigInt weight(ClassTag tag, int k, const PartitionDiagram& p) {
  switch (tag) {
    case ClassTag::partitions_k:
      return is_k_noncrossing(p, k) ? 1 : 0;
    case ClassTag::two_regular_k:
      return is_two_regular(p) && is_k_noncrossing(p, k) ? 1 : 0;
    case ClassTag::braids_k_no_isolated:
      return is_k_noncrossing(BraidDiagram(p.diagram()), k) ? 1 : 0;
    case ClassTag::braids_k: {
      if (!is_k_noncrossing(BraidDiagram(p.diagram()), k)) return 0;
      // Loops never join a crossing, so each isolated vertex doubles.
      std::vector<char> touched(p.size() + 1, 0);
      for (const Arc& a : p.arcs()) touched[a.left] = touched[a.right] = 1;
      BigInt w = 1;
      for (int v = 1; v <= p.size(); ++v) {
        if (!touched[v]) w *= 2;
      }
      return w;
    }
  }
  return 0;
}

BigInt count_with_prefix(ClassTag tag, int k, int n, std::span<const int> prefix) {
  BigInt total = 0;
  for_each_restricted_growth_string(n, prefix, [&](std::span<const int> rgs) {
    total += weight(tag, k, partition_from_rgs(rgs));
  });
  return total;
}

}  // namespace

BigInt brute_count(ClassTag class_tag, int k, int n, int jobs) {
  if (k < 2) throw Error(ErrorCode::precondition, "k must be at least 2");
  if (n < 0) throw Error(ErrorCode::precondition, "n must be nonnegative");
  if (bell_number(n) > kBruteForceLimit) {
    throw Error(ErrorCode::range_guard, "Bell(" + std::to_string(n) + ") exceeds the brute-force limit");
  }
  const int prefix_length = std::min(n, 5);
  if (jobs <= 1 || prefix_length < 2) return count_with_prefix(class_tag, k, n, {});

  std::vector<std::vector<int>> prefixes;
  for_each_restricted_growth_string(prefix_length, [&](std::span<const int> p) {
    prefixes.emplace_back(p.begin(), p.end());
  });
  std::vector<std::future<BigInt>> shards;
  for (int j = 0; j < jobs; ++j) {
    shards.push_back(std::async(std::launch::async, [&, j] {
      BigInt sum = 0;
      for (std::size_t i = j; i < prefixes.size(); i += jobs) sum += count_with_prefix(class_tag, k, n, prefixes[i]);
      return sum;
    }));
  }
  BigInt total = 0;
  for (auto& shard : shards) total += shard.get();
  return total;
}

CountTable count_table(ClassTag class_tag, int k, int n_max, Route route, int jobs) {
  if (k < 2) throw Error(ErrorCode::precondition, "k must be at least 2");
  if (n_max < 0) throw Error(ErrorCode::precondition, "n_max must be nonnegative");
  CountTable table{class_tag, k, route, {}};
  if (route == Route::brute) {
    if (bell_number(n_max) > kBruteForceLimit) {
      throw Error(ErrorCode::range_guard,
                  "brute force refused: Bell(" + std::to_string(n_max) + ") exceeds " + std::to_string(kBruteForceLimit));
    }
    for (int n = 0; n <= n_max; ++n) table.entries[n] = brute_count(class_tag, k, n, jobs);
    return table;
  }
  if (k != 3) throw Error(ErrorCode::precondition, "route " + std::string(to_string(route)) + " exists only for k = 3");
  if (class_tag == ClassTag::braids_k_no_isolated) {
    table.entries = rho3_table(route, n_max).entries;
  } else if (class_tag == ClassTag::two_regular_k) {
    for (const auto& [n, v] : rho3_table(route, n_max - 1).entries) table.entries[n + 1] = v;
  } else {
    throw Error(ErrorCode::precondition,
                "route " + std::string(to_string(route)) + " counts only braids-noiso and 2regular");
  }
  return table;
}

}  // namespace kncross
