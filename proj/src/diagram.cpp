#include "kncross/diagram.hpp"
#include "kncross/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kncross {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::validation, what); }

// left_of[v] = h when (v,h) is an arc, right_of[v] = i when (i,v) is an arc;
// a loop (v,v) sets both to v.
struct Endpoints {
  std::vector<int> left_of;
  std::vector<int> right_of;
};

Endpoints endpoints_of(const ArcDiagram& d) {
  Endpoints e{std::vector<int>(d.size() + 1, 0), std::vector<int>(d.size() + 1, 0)};
  for (const Arc& a : d.arcs()) {
    e.left_of[a.left] = a.right;
    e.right_of[a.right] = a.left;
  }
  return e;
}

// Longest run of arcs, ordered by left endpoint, whose right endpoints strictly
// increase. Arcs are sorted by (left, right) and lefts are distinct in both
// diagram classes, so this is a strict chain in both coordinates.
int longest_increasing_chain(const std::vector<Arc>& arcs) {
  std::vector<int> tails;
  for (const Arc& a : arcs) {
    auto it = std::lower_bound(tails.begin(), tails.end(), a.right);
    if (it == tails.end()) {
      tails.push_back(a.right);
    } else {
      *it = a.right;
    }
  }
  return static_cast<int>(tails.size());
}

template <class Spans>
int max_over_cuts(const ArcDiagram& d, Spans spans) {
  int best = 0;
  std::vector<Arc> open;
  for (int cut = 1; cut <= d.size(); ++cut) {
    open.clear();
    for (const Arc& a : d.arcs()) {
      if (spans(a, cut)) open.push_back(a);
    }
    best = std::max(best, longest_increasing_chain(open));
  }
  return best;
}

}  // namespace

ArcDiagram::ArcDiagram(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 0) invalid("vertex count must be nonnegative");
  std::vector<int> degree(n_ + 1, 0);
  for (const Arc& a : arcs_) {
    if (a.left < 1 || a.right > n_ || a.left > a.right) {
      invalid("arc (" + std::to_string(a.left) + "," + std::to_string(a.right) + ") outside [1," +
              std::to_string(n_) + "] or reversed");
    }
    if (a.is_loop()) {
      degree[a.left] += 2;
    } else {
      ++degree[a.left];
      ++degree[a.right];
    }
  }
  for (int v = 1; v <= n_; ++v) {
    if (degree[v] > 2) invalid("vertex " + std::to_string(v) + " has degree > 2");
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) invalid("repeated arc");
}

int ArcDiagram::degree(int vertex) const {
  int deg = 0;
  for (const Arc& a : arcs_) {
    if (a.left == vertex) ++deg;
    if (a.right == vertex) ++deg;
  }
  return deg;
}

bool PartitionDiagram::satisfies_invariants(const ArcDiagram& d) {
  std::vector<char> is_left(d.size() + 1, 0), is_right(d.size() + 1, 0);
  for (const Arc& a : d.arcs()) {
    if (a.is_loop() || is_left[a.left] || is_right[a.right]) return false;
    is_left[a.left] = is_right[a.right] = 1;
  }
  return true;
}

PartitionDiagram::PartitionDiagram(ArcDiagram diagram) : diagram_(std::move(diagram)) {
  if (!satisfies_invariants(diagram_)) invalid("not a partition diagram: " + to_string(diagram_));
}

bool BraidDiagram::satisfies_invariants(const ArcDiagram& d) {
  std::vector<char> is_left(d.size() + 1, 0), is_right(d.size() + 1, 0), has_loop(d.size() + 1, 0);
  for (const Arc& a : d.arcs()) {
    if (a.is_loop()) {
      if (has_loop[a.left] || is_left[a.left] || is_right[a.left]) return false;
      has_loop[a.left] = 1;
      continue;
    }
    if (is_left[a.left] || is_right[a.right] || has_loop[a.left] || has_loop[a.right]) return false;
    is_left[a.left] = is_right[a.right] = 1;
  }
  return true;
}

BraidDiagram::BraidDiagram(ArcDiagram diagram) : diagram_(std::move(diagram)) {
  if (!satisfies_invariants(diagram_)) invalid("not a braid diagram: " + to_string(diagram_));
}

SetPartitionBlocks::SetPartitionBlocks(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) invalid("vertex count must be nonnegative");
  std::vector<char> seen(n_ + 1, 0);
  for (auto& block : blocks_) {
    if (block.empty()) invalid("empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > n_) invalid("element " + std::to_string(v) + " outside [1," + std::to_string(n_) + "]");
      if (seen[v]) invalid("element " + std::to_string(v) + " appears in two blocks");
      seen[v] = 1;
    }
  }
  for (int v = 1; v <= n_; ++v) {
    if (!seen[v]) invalid("element " + std::to_string(v) + " not covered");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

PartitionDiagram partition_from_blocks(const SetPartitionBlocks& blocks) {
  std::vector<Arc> arcs;
  for (const auto& block : blocks.blocks()) {
    for (std::size_t i = 0; i + 1 < block.size(); ++i) arcs.push_back({block[i], block[i + 1]});
  }
  return PartitionDiagram(blocks.size(), std::move(arcs));
}

SetPartitionBlocks blocks_from_partition(const PartitionDiagram& partition) {
  const int n = partition.size();
  const Endpoints e = endpoints_of(partition.diagram());
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) {
    if (e.right_of[v] != 0) continue;  // not the minimum of its block
    std::vector<int> block;
    for (int u = v; u != 0; u = e.left_of[u]) block.push_back(u);
    blocks.push_back(std::move(block));
  }
  return SetPartitionBlocks(n, std::move(blocks));
}

int max_mutually_crossing(const PartitionDiagram& partition) {
  return max_over_cuts(partition.diagram(), [](const Arc& a, int cut) { return a.left <= cut && cut < a.right; });
}

int max_mutually_crossing(const BraidDiagram& braid) {
  return max_over_cuts(braid.diagram(), [](const Arc& a, int cut) { return a.left <= cut && cut <= a.right; });
}

bool is_k_noncrossing(const PartitionDiagram& partition, int k) {
  if (k < 2) throw Error(ErrorCode::precondition, "k must be at least 2");
  return max_mutually_crossing(partition) < k;
}

bool is_k_noncrossing(const BraidDiagram& braid, int k) {
  if (k < 2) throw Error(ErrorCode::precondition, "k must be at least 2");
  return max_mutually_crossing(braid) < k;
}

bool is_two_regular(const PartitionDiagram& partition) {
  return std::none_of(partition.arcs().begin(), partition.arcs().end(),
                      [](const Arc& a) { return a.right == a.left + 1; });
}

bool has_isolated_points(const BraidDiagram& braid) {
  std::vector<char> touched(braid.size() + 1, 0);
  for (const Arc& a : braid.arcs()) touched[a.left] = touched[a.right] = 1;
  return std::count(touched.begin() + 1, touched.end(), 0) > 0;
}

PartitionDiagram braid_to_flat_partition(const BraidDiagram& braid) {
  std::vector<Arc> arcs;
  for (const Arc& a : braid.arcs()) {
    if (!a.is_loop()) arcs.push_back(a);
  }
  return PartitionDiagram(braid.size(), std::move(arcs));
}

BraidDiagram flat_partition_to_braid(const PartitionDiagram& partition) {
  std::vector<char> touched(partition.size() + 1, 0);
  std::vector<Arc> arcs = partition.arcs();
  for (const Arc& a : arcs) touched[a.left] = touched[a.right] = 1;
  for (int v = 1; v <= partition.size(); ++v) {
    if (!touched[v]) arcs.push_back({v, v});
  }
  return BraidDiagram(partition.size(), std::move(arcs));
}

std::string to_string(const ArcDiagram& diagram) {
  std::string out = "n=" + std::to_string(diagram.size()) + "; arcs=";
  for (const Arc& a : diagram.arcs()) {
    out += '(' + std::to_string(a.left) + ',' + std::to_string(a.right) + ')';
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  bool peek(char c) const { return !done() && text_[pos_] == c; }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  int integer() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse, "diagram text, column " + std::to_string(pos_ + 1) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ArcDiagram parse_diagram(std::string_view text) {
  Cursor in(text);
  in.expect("n=");
  const int n = in.integer();
  in.expect("; arcs=");
  std::vector<Arc> arcs;
  while (in.peek('(')) {
    in.expect("(");
    const int i = in.integer();
    in.expect(",");
    const int j = in.integer();
    in.expect(")");
    arcs.push_back({i, j});
  }
  if (!in.done()) in.fail("trailing characters");
  if (!std::is_sorted(arcs.begin(), arcs.end())) in.fail("arcs not in canonical order");
  try {
    return ArcDiagram(n, std::move(arcs));
  } catch (const Error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
}

std::string render_svg(const ArcDiagram& diagram) {
  constexpr int kSpacing = 40;
  constexpr int kMargin = 30;
  constexpr int kLoopRadius = 8;
  const int n = diagram.size();
  int max_span = 1;
  for (const Arc& a : diagram.arcs()) max_span = std::max(max_span, a.right - a.left);
  const int width = 2 * kMargin + std::max(0, n - 1) * kSpacing;
  const int baseline = kMargin + max_span * kSpacing / 2 + 2 * kLoopRadius;
  const int height = baseline + kMargin;
  auto x_of = [&](int v) { return kMargin + (v - 1) * kSpacing; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "  <line x1=\"" << kMargin / 2 << "\" y1=\"" << baseline << "\" x2=\"" << width - kMargin / 2
      << "\" y2=\"" << baseline << "\" stroke=\"black\"/>\n";
  for (const Arc& a : diagram.arcs()) {
    if (a.is_loop()) {
      svg << "  <circle class=\"loop\" cx=\"" << x_of(a.left) << "\" cy=\"" << baseline - kLoopRadius
          << "\" r=\"" << kLoopRadius << "\" fill=\"none\" stroke=\"black\"/>\n";
    } else {
      const int r = (a.right - a.left) * kSpacing / 2;
      svg << "  <path class=\"arc\" d=\"M " << x_of(a.left) << ' ' << baseline << " A " << r << ' ' << r
          << " 0 0 1 " << x_of(a.right) << ' ' << baseline << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
  }
  for (int v = 1; v <= n; ++v) {
    svg << "  <circle class=\"vertex\" cx=\"" << x_of(v) << "\" cy=\"" << baseline << "\" r=\"3\"/>\n";
    svg << "  <text x=\"" << x_of(v) << "\" y=\"" << baseline + 18 << "\" text-anchor=\"middle\">" << v
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace kncross
