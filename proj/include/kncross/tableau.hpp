#pragma once

// Vacillating tableaux over the partition step set P and the braid step set B,
// and the insertion bijection between them and partition / braid diagrams.
//
//   P = {(0,0), (-h,0), (0,+h), (-j,+h)}   removal before addition
//   B = {(0,0), (-h,0), (0,+h), (+h,-j)}   addition before removal

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kncross/diagram.hpp"

namespace kncross {

/// Young diagram outline: weakly decreasing positive row lengths; empty is the
/// empty shape.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> rows);

  const std::vector<int>& rows() const noexcept { return rows_; }
  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  int cell_count() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }

  /// Row indices are 1-based. Both throw when the result is not a shape.
  Shape with_added(int row) const;
  Shape with_removed(int row) const;
  bool can_add(int row) const noexcept;
  bool can_remove(int row) const noexcept;

  bool operator==(const Shape&) const = default;

 private:
  std::vector<int> rows_;
};

struct HalfStep {
  enum class Kind { none, add, remove };

  Kind kind = Kind::none;
  int row = 0;

  static HalfStep none() { return {}; }
  static HalfStep add(int row) { return {Kind::add, row}; }
  static HalfStep remove(int row) { return {Kind::remove, row}; }

  bool is_none() const noexcept { return kind == Kind::none; }
  bool is_add() const noexcept { return kind == Kind::add; }
  bool is_remove() const noexcept { return kind == Kind::remove; }

  bool operator==(const HalfStep&) const = default;
};

struct StepPair {
  HalfStep odd;
  HalfStep even;

  bool operator==(const StepPair&) const = default;
};

enum class StepSet { partition, braid };

bool is_legal(const StepPair& pair, StepSet step_set) noexcept;

/// Shapes lambda^0, ..., lambda^{2n}. Only tableaux of final shape empty occur.
struct VacillatingTableau {
  std::vector<Shape> shapes;
  StepSet step_set = StepSet::partition;
  std::optional<int> k_bound;

  int length() const noexcept { return static_cast<int>(shapes.size() / 2); }
  bool operator==(const VacillatingTableau&) const = default;
};

struct TableauReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

TableauReport validate_tableau(const VacillatingTableau& tableau);

/// The half-step turning `from` into `to`, or nullopt when they differ by more
/// than one square.
std::optional<HalfStep> half_step_between(const Shape& from, const Shape& to);

std::vector<StepPair> step_pairs(const VacillatingTableau& tableau);
VacillatingTableau tableau_from_step_pairs(std::span<const StepPair> pairs, StepSet step_set);

int max_row_count(const VacillatingTableau& tableau);

/// Increasing filling used as the working state of the insertion bijection.
/// Entries are distinct and increase along rows and down columns.
class InsertionFilling {
 public:
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Shape shape() const;

  /// RSK row insertion; returns the 1-based row that gained a cell.
  int row_insert(int value);
  /// Empties the corner at the end of `row` and reverse-bumps up to row 1;
  /// returns the entry ejected from the first row.
  int reverse_bump(int row);
  /// Writes `value` into a new cell at the end of `row`; it must exceed every
  /// entry it would sit right of or below.
  void place(int row, int value);
  /// Removes the largest entry, which must equal `value`; returns its row.
  int erase_max(int value);

 private:
  std::vector<std::vector<int>> rows_;
};

/// Left-to-right scan: an add half-step at vertex i places i into the new
/// cell, a remove half-step reverse-bumps from the removed corner and records
/// the arc (ejected, i).
PartitionDiagram partition_from_tableau(const VacillatingTableau& tableau);
BraidDiagram braid_from_tableau(const VacillatingTableau& tableau);
std::variant<PartitionDiagram, BraidDiagram> tableau_to_diagram(const VacillatingTableau& tableau);

/// Right-to-left scan with RSK row insertion of left endpoints; exact inverse
/// of the functions above.
VacillatingTableau diagram_to_tableau(const PartitionDiagram& partition);
VacillatingTableau diagram_to_tableau(const BraidDiagram& braid);

// Text format: shapes as comma-separated rows joined by '|', the empty shape
// written as an empty field; (empty, [1], empty) is "|1|".
std::string to_string(const VacillatingTableau& tableau);
VacillatingTableau parse_tableau(std::string_view text, StepSet step_set);

std::string to_string(const HalfStep& step);
std::string to_string(const StepPair& pair);

}  // namespace kncross
