#include "kncross/tableau.hpp"
#include "kncross/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace kncross {

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t h = 0; h < rows_.size(); ++h) {
    if (rows_[h] <= 0) throw Error(ErrorCode::validation, "shape rows must be positive");
    if (h > 0 && rows_[h] > rows_[h - 1]) throw Error(ErrorCode::validation, "shape rows must weakly decrease");
  }
}

int Shape::cell_count() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool Shape::can_add(int row) const noexcept {
  if (row < 1 || row > row_count() + 1) return false;
  if (row == 1) return true;
  const int above = rows_[row - 2];
  const int current = row <= row_count() ? rows_[row - 1] : 0;
  return current < above;
}

bool Shape::can_remove(int row) const noexcept {
  if (row < 1 || row > row_count()) return false;
  return row == row_count() || rows_[row] < rows_[row - 1];
}

Shape Shape::with_added(int row) const {
  if (!can_add(row)) throw Error(ErrorCode::validation, "cannot add a square in row " + std::to_string(row));
  Shape next = *this;
  if (row > row_count()) {
    next.rows_.push_back(1);
  } else {
    ++next.rows_[row - 1];
  }
  return next;
}

Shape Shape::with_removed(int row) const {
  if (!can_remove(row)) throw Error(ErrorCode::validation, "cannot remove a square from row " + std::to_string(row));
  Shape next = *this;
  if (--next.rows_[row - 1] == 0) next.rows_.pop_back();
  return next;
}

bool is_legal(const StepPair& pair, StepSet step_set) noexcept {
  const HalfStep& a = pair.odd;
  const HalfStep& b = pair.even;
  if (a.is_none() && b.is_none()) return true;
  if (a.is_remove() && b.is_none()) return true;
  if (a.is_none() && b.is_add()) return true;
  if (step_set == StepSet::partition) return a.is_remove() && b.is_add();
  return a.is_add() && b.is_remove();
}

std::optional<HalfStep> half_step_between(const Shape& from, const Shape& to) {
  const int d = to.cell_count() - from.cell_count();
  if (d == 0) {
    if (from == to) return HalfStep::none();
    return std::nullopt;
  }
  const int rows = std::max(from.row_count(), to.row_count());
  auto len = [](const Shape& s, int h) { return h < s.row_count() ? s.rows()[h] : 0; };
  int changed = -1;
  for (int h = 0; h < rows; ++h) {
    const int diff = len(to, h) - len(from, h);
    if (diff == 0) continue;
    if (changed != -1 || (diff != 1 && diff != -1)) return std::nullopt;
    changed = h;
  }
  if (changed == -1) return std::nullopt;
  return d > 0 ? HalfStep::add(changed + 1) : HalfStep::remove(changed + 1);
}

TableauReport validate_tableau(const VacillatingTableau& t) {
  TableauReport report;
  auto note = [&](std::string what) { report.violations.push_back(std::move(what)); };
  if (t.shapes.size() % 2 == 0) {
    note("shape count " + std::to_string(t.shapes.size()) + " is not 2n+1");
    return report;
  }
  if (!t.shapes.front().empty()) note("first shape is not empty");
  if (!t.shapes.back().empty()) note("last shape is not empty");
  if (t.k_bound) {
    for (std::size_t i = 0; i < t.shapes.size(); ++i) {
      if (t.shapes[i].row_count() >= *t.k_bound) {
        note("shape " + std::to_string(i) + " has " + std::to_string(t.shapes[i].row_count()) + " rows, bound " +
             std::to_string(*t.k_bound));
      }
    }
  }
  for (int i = 1; i <= t.length(); ++i) {
    const auto odd = half_step_between(t.shapes[2 * i - 2], t.shapes[2 * i - 1]);
    const auto even = half_step_between(t.shapes[2 * i - 1], t.shapes[2 * i]);
    if (!odd || !even) {
      note("step " + std::to_string(i) + " changes more than one square");
      continue;
    }
    if (!is_legal({*odd, *even}, t.step_set)) {
      note("step " + std::to_string(i) + " " + to_string(StepPair{*odd, *even}) + " not in the " +
           (t.step_set == StepSet::partition ? "partition" : "braid") + " step set");
    }
  }
  return report;
}

namespace {

void require_valid(const VacillatingTableau& t) {
  const TableauReport report = validate_tableau(t);
  if (!report) throw Error(ErrorCode::malformed_tableau, "invalid tableau: " + report.violations.front());
}

}  // namespace

std::vector<StepPair> step_pairs(const VacillatingTableau& t) {
  require_valid(t);
  std::vector<StepPair> pairs;
  pairs.reserve(t.length());
  for (int i = 1; i <= t.length(); ++i) {
    pairs.push_back({*half_step_between(t.shapes[2 * i - 2], t.shapes[2 * i - 1]),
                     *half_step_between(t.shapes[2 * i - 1], t.shapes[2 * i])});
  }
  return pairs;
}

VacillatingTableau tableau_from_step_pairs(std::span<const StepPair> pairs, StepSet step_set) {
  VacillatingTableau t{{Shape{}}, step_set, std::nullopt};
  auto apply = [](const Shape& s, const HalfStep& step) {
    switch (step.kind) {
      case HalfStep::Kind::add: return s.with_added(step.row);
      case HalfStep::Kind::remove: return s.with_removed(step.row);
      case HalfStep::Kind::none: break;
    }
    return s;
  };
  for (const StepPair& pair : pairs) {
    if (!is_legal(pair, step_set)) throw Error(ErrorCode::validation, "illegal step pair " + to_string(pair));
    t.shapes.push_back(apply(t.shapes.back(), pair.odd));
    t.shapes.push_back(apply(t.shapes.back(), pair.even));
  }
  if (!t.shapes.back().empty()) throw Error(ErrorCode::validation, "step pairs do not return to the empty shape");
  return t;
}

int max_row_count(const VacillatingTableau& t) {
  int rows = 0;
  for (const Shape& s : t.shapes) rows = std::max(rows, s.row_count());
  return rows;
}

Shape InsertionFilling::shape() const {
  std::vector<int> lengths;
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  return Shape(std::move(lengths));
}

int InsertionFilling::row_insert(int value) {
  for (std::size_t h = 0; h < rows_.size(); ++h) {
    auto& row = rows_[h];
    auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return static_cast<int>(h) + 1;
    }
    std::swap(*it, value);
  }
  rows_.push_back({value});
  return static_cast<int>(rows_.size());
}

int InsertionFilling::reverse_bump(int row) {
  if (row < 1 || row > static_cast<int>(rows_.size()) ||
      (row < static_cast<int>(rows_.size()) && rows_[row].size() >= rows_[row - 1].size())) {
    throw Error(ErrorCode::malformed_tableau, "no corner at the end of row " + std::to_string(row));
  }
  int value = rows_[row - 1].back();
  rows_[row - 1].pop_back();
  if (rows_[row - 1].empty()) rows_.pop_back();
  for (int h = row - 2; h >= 0; --h) {
    auto& above = rows_[h];
    // largest entry smaller than value
    auto it = std::lower_bound(above.begin(), above.end(), value);
    if (it == above.begin()) throw Error(ErrorCode::malformed_tableau, "filling is not increasing");
    std::swap(*std::prev(it), value);
  }
  return value;
}

void InsertionFilling::place(int row, int value) {
  if (!shape().can_add(row)) throw Error(ErrorCode::malformed_tableau, "cannot place into row " + std::to_string(row));
  if (row > static_cast<int>(rows_.size())) rows_.emplace_back();
  auto& target = rows_[row - 1];
  const std::size_t column = target.size();
  if ((!target.empty() && target.back() >= value) || (row > 1 && rows_[row - 2][column] >= value)) {
    throw Error(ErrorCode::malformed_tableau, "placing " + std::to_string(value) + " breaks monotonicity");
  }
  target.push_back(value);
}

int InsertionFilling::erase_max(int value) {
  for (std::size_t h = 0; h < rows_.size(); ++h) {
    if (rows_[h].back() != value) continue;
    if (h + 1 < rows_.size() && rows_[h + 1].size() == rows_[h].size()) break;
    rows_[h].pop_back();
    if (rows_[h].empty()) rows_.pop_back();
    return static_cast<int>(h) + 1;
  }
  throw Error(ErrorCode::malformed_tableau, std::to_string(value) + " is not a corner entry");
}

namespace {

ArcDiagram scan_left_to_right(const VacillatingTableau& t) {
  require_valid(t);
  const std::vector<StepPair> pairs = step_pairs(t);
  InsertionFilling filling;
  std::vector<Arc> arcs;
  auto half = [&](const HalfStep& step, int vertex) {
    if (step.is_add()) {
      filling.place(step.row, vertex);
    } else if (step.is_remove()) {
      arcs.push_back({filling.reverse_bump(step.row), vertex});
    }
  };
  for (int i = 1; i <= t.length(); ++i) {
    half(pairs[i - 1].odd, i);
    half(pairs[i - 1].even, i);
  }
  return ArcDiagram(t.length(), std::move(arcs));
}

// left_of[v] = h for an arc (v,h) (loops included), right_of[v] = i for (i,v).
VacillatingTableau scan_right_to_left(const ArcDiagram& d, StepSet step_set) {
  const int n = d.size();
  std::vector<int> left_of(n + 1, 0), right_of(n + 1, 0);
  for (const Arc& a : d.arcs()) {
    left_of[a.left] = a.right;
    right_of[a.right] = a.left;
  }
  std::vector<Shape> reversed{Shape{}};
  InsertionFilling filling;
  auto undo_origin = [&](int v) {
    if (left_of[v] != 0) filling.erase_max(v);
    reversed.push_back(filling.shape());
  };
  auto undo_endpoint = [&](int v) {
    if (right_of[v] != 0) filling.row_insert(right_of[v]);
    reversed.push_back(filling.shape());
  };
  for (int v = n; v >= 1; --v) {
    // Lone origins and endpoints use (0,+h) and (-h,0) in both step sets; only
    // a braid vertex carrying both reverses the order to (+h,-j).
    if (step_set == StepSet::braid && left_of[v] != 0 && right_of[v] != 0) {
      undo_endpoint(v);
      undo_origin(v);
    } else {
      undo_origin(v);
      undo_endpoint(v);
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return VacillatingTableau{std::move(reversed), step_set, std::nullopt};
}

}  // namespace

PartitionDiagram partition_from_tableau(const VacillatingTableau& t) {
  if (t.step_set != StepSet::partition) throw Error(ErrorCode::precondition, "expected a partition tableau");
  return PartitionDiagram(scan_left_to_right(t));
}

BraidDiagram braid_from_tableau(const VacillatingTableau& t) {
  if (t.step_set != StepSet::braid) throw Error(ErrorCode::precondition, "expected a braid tableau");
  return BraidDiagram(scan_left_to_right(t));
}

std::variant<PartitionDiagram, BraidDiagram> tableau_to_diagram(const VacillatingTableau& t) {
  if (t.step_set == StepSet::partition) return partition_from_tableau(t);
  return braid_from_tableau(t);
}

VacillatingTableau diagram_to_tableau(const PartitionDiagram& partition) {
  return scan_right_to_left(partition.diagram(), StepSet::partition);
}

VacillatingTableau diagram_to_tableau(const BraidDiagram& braid) {
  return scan_right_to_left(braid.diagram(), StepSet::braid);
}

std::string to_string(const VacillatingTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.shapes.size(); ++i) {
    if (i > 0) out += '|';
    const auto& rows = t.shapes[i].rows();
    for (std::size_t h = 0; h < rows.size(); ++h) {
      if (h > 0) out += ',';
      out += std::to_string(rows[h]);
    }
  }
  return out;
}

VacillatingTableau parse_tableau(std::string_view text, StepSet step_set) {
  VacillatingTableau t{{}, step_set, std::nullopt};
  auto parse_shape = [](std::string_view field) {
    std::vector<int> rows;
    std::size_t pos = 0;
    while (pos < field.size()) {
      if (!rows.empty()) {
        if (field[pos] != ',') throw Error(ErrorCode::parse, "bad shape field '" + std::string(field) + "'");
        ++pos;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data() + pos, field.data() + field.size(), value);
      if (ec != std::errc() || ptr == field.data() + pos) {
        throw Error(ErrorCode::parse, "bad shape field '" + std::string(field) + "'");
      }
      pos = static_cast<std::size_t>(ptr - field.data());
      rows.push_back(value);
    }
    try {
      return Shape(std::move(rows));
    } catch (const Error& e) {
      throw Error(ErrorCode::parse, e.what());
    }
  };
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    t.shapes.push_back(parse_shape(text.substr(start, bar == std::string_view::npos ? text.npos : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return t;
}

std::string to_string(const HalfStep& step) {
  switch (step.kind) {
    case HalfStep::Kind::add: return "+" + std::to_string(step.row);
    case HalfStep::Kind::remove: return "-" + std::to_string(step.row);
    case HalfStep::Kind::none: break;
  }
  return "0";
}

std::string to_string(const StepPair& pair) { return "(" + to_string(pair.odd) + "," + to_string(pair.even) + ")"; }

}  // namespace kncross
