#ifndef SGROTH_TABLEAUX_HPP
#define SGROTH_TABLEAUX_HPP

// Backtracking enumeration of semistandard, flagged strictly increasing skew
// (Lenart), and set-valued semistandard tableaux.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "sgroth/core.hpp"

namespace sgroth {

/// 1-based box coordinates.
struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Labels are limited to 1..kMaxLabel.
inline constexpr int kMaxLabel = 31;

/// Nonempty set of labels in [1, 31], stored as a bitmask.
class LabelSet {
 public:
  constexpr LabelSet() = default;

  static constexpr LabelSet singleton(int label) {
    LabelSet s;
    s.insert(label);
    return s;
  }

  static LabelSet of(std::initializer_list<int> labels) {
    LabelSet s;
    for (int l : labels) s.insert(l);
    return s;
  }

  static constexpr LabelSet from_bits(std::uint32_t bits) {
    LabelSet s;
    s.bits_ = bits & ~std::uint32_t{1};
    return s;
  }

  constexpr void insert(int label) {
    if (label < 1 || label > kMaxLabel) throw std::out_of_range("label out of range");
    bits_ |= std::uint32_t{1} << label;
  }

  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int label) const noexcept {
    return label >= 1 && label <= kMaxLabel && ((bits_ >> label) & 1u);
  }
  /// Smallest label; 0 when empty.
  constexpr int min() const noexcept { return bits_ ? std::countr_zero(bits_) : 0; }
  /// Largest label; 0 when empty.
  constexpr int max() const noexcept { return bits_ ? 31 - std::countl_zero(bits_) : 0; }
  constexpr std::uint32_t bits() const noexcept { return bits_; }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (int l = 1; l <= kMaxLabel; ++l) {
      if (contains(l)) out.push_back(l);
    }
    return out;
  }

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A filling of the skew diagram shape/inner. Cells are kept in row-major
/// order; `entries()[i]` fills `cells()[i]`. Unfilled cells hold an empty set.
class Tableau {
 public:
  Tableau(Partition shape, Partition inner)
      : shape_(std::move(shape)), inner_(std::move(inner)) {
    if (!shape_.contains(inner_)) throw std::invalid_argument("not a skew shape");
    for (int r = 1; r <= shape_.length(); ++r) {
      for (int c = inner_.row(r) + 1; c <= shape_.row(r); ++c) {
        cells_.push_back({r, c});
      }
    }
    entries_.resize(cells_.size());
  }

  explicit Tableau(Partition shape) : Tableau(std::move(shape), Partition{}) {}

  const Partition& shape() const noexcept { return shape_; }
  const Partition& inner() const noexcept { return inner_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const std::vector<LabelSet>& entries() const noexcept { return entries_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }

  bool in_skew(Cell cell) const noexcept {
    return cell.row >= 1 && cell.col > inner_.row(cell.row) &&
           cell.col <= shape_.row(cell.row);
  }

  std::optional<std::size_t> index_of(Cell cell) const {
    if (!in_skew(cell)) return std::nullopt;
    std::size_t idx = 0;
    for (int r = 1; r < cell.row; ++r) {
      idx += static_cast<std::size_t>(shape_.row(r) - inner_.row(r));
    }
    return idx + static_cast<std::size_t>(cell.col - inner_.row(cell.row) - 1);
  }

  LabelSet at(Cell cell) const {
    auto idx = index_of(cell);
    if (!idx) throw std::out_of_range("cell outside the skew shape");
    return entries_[*idx];
  }

  void set(std::size_t index, LabelSet labels) { entries_.at(index) = labels; }
  void set(Cell cell, LabelSet labels) {
    auto idx = index_of(cell);
    if (!idx) throw std::out_of_range("cell outside the skew shape");
    entries_[*idx] = labels;
  }

  /// Total number of labels across all cells.
  int label_count() const noexcept {
    int total = 0;
    for (auto s : entries_) total += s.size();
    return total;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i > 0) out += cells_[i].row == cells_[i - 1].row ? " " : " / ";
      const auto labels = entries_[i].labels();
      if (labels.size() == 1) {
        out += std::to_string(labels[0]);
      } else {
        out += '{';
        for (std::size_t j = 0; j < labels.size(); ++j) {
          if (j) out += ',';
          out += std::to_string(labels[j]);
        }
        out += '}';
      }
    }
    return out;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  Partition inner_;
  std::vector<Cell> cells_;
  std::vector<LabelSet> entries_;
};

/// Multiplicity of each label 1..n across all cells.
inline ExponentVector content(const Tableau& t, int n) {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (auto s : t.entries()) {
    if (s.max() > n) {
      throw std::out_of_range("tableau entry " + std::to_string(s.max()) +
                              " exceeds n = " + std::to_string(n));
    }
    for (std::uint32_t bits = s.bits(); bits; bits &= bits - 1) {
      ++out[static_cast<std::size_t>(std::countr_zero(bits) - 1)];
    }
  }
  return ExponentVector(std::move(out));
}

// Post-hoc validity predicates. These look up neighbours by coordinates and
// share nothing with the enumeration engine.

/// Singleton entries in [1,n]; rows weakly, columns strictly increasing.
inline bool is_semistandard(const Tableau& t, int n) {
  for (std::size_t i = 0; i < t.cells().size(); ++i) {
    const Cell cell = t.cells()[i];
    const LabelSet s = t.entries()[i];
    if (s.size() != 1 || s.max() > n) return false;
    if (t.in_skew({cell.row, cell.col - 1}) &&
        t.at({cell.row, cell.col - 1}).max() > s.min()) {
      return false;
    }
    if (t.in_skew({cell.row - 1, cell.col}) &&
        t.at({cell.row - 1, cell.col}).max() >= s.min()) {
      return false;
    }
  }
  return true;
}

/// Singleton entries in [1,n], strictly increasing along rows and down
/// columns, every entry in row r at most r-1.
inline bool is_lenart(const Tableau& t, int n) {
  for (std::size_t i = 0; i < t.cells().size(); ++i) {
    const Cell cell = t.cells()[i];
    const LabelSet s = t.entries()[i];
    if (s.size() != 1 || s.max() > n || s.max() > cell.row - 1) return false;
    if (t.in_skew({cell.row, cell.col - 1}) &&
        t.at({cell.row, cell.col - 1}).max() >= s.min()) {
      return false;
    }
    if (t.in_skew({cell.row - 1, cell.col}) &&
        t.at({cell.row - 1, cell.col}).max() >= s.min()) {
      return false;
    }
  }
  return true;
}

/// Nonempty subsets of [1,n]; max(left) ≤ min(right), max(upper) < min(lower).
inline bool is_set_valued_semistandard(const Tableau& t, int n) {
  for (std::size_t i = 0; i < t.cells().size(); ++i) {
    const Cell cell = t.cells()[i];
    const LabelSet s = t.entries()[i];
    if (s.empty() || s.max() > n) return false;
    if (t.in_skew({cell.row, cell.col - 1}) &&
        t.at({cell.row, cell.col - 1}).max() > s.min()) {
      return false;
    }
    if (t.in_skew({cell.row - 1, cell.col}) &&
        t.at({cell.row - 1, cell.col}).max() >= s.min()) {
      return false;
    }
  }
  return true;
}

namespace detail {

enum class Family { kSemistandard, kLenart, kSetValued };

struct CellRule {
  int left = -1;   // index of the left neighbour in the skew shape, or -1
  int above = -1;  // index of the upper neighbour in the skew shape, or -1
  int cap = 0;     // largest label any feasible completion allows here
};

// Calls f(tableau) for every filling; f may return bool (false stops).
// Returns false when stopped early.
template <class F>
bool invoke_visitor(F& f, const Tableau& t) {
  if constexpr (std::is_same_v<std::invoke_result_t<F&, const Tableau&>, bool>) {
    return f(t);
  } else {
    f(t);
    return true;
  }
}

template <class F>
class Backtracker {
 public:
  Backtracker(Tableau frame, Family family, int n, F& visit)
      : t_(std::move(frame)), family_(family), visit_(visit) {
    const Partition& shape = t_.shape();
    rules_.resize(t_.cell_count());
    for (std::size_t i = 0; i < t_.cell_count(); ++i) {
      const Cell cell = t_.cells()[i];
      CellRule& rule = rules_[i];
      if (auto left = t_.index_of({cell.row, cell.col - 1})) rule.left = static_cast<int>(*left);
      if (auto up = t_.index_of({cell.row - 1, cell.col})) rule.above = static_cast<int>(*up);
      // Cells below in the same column need strictly larger labels.
      int below = 0;
      while (shape.row(cell.row + below + 1) >= cell.col) ++below;
      rule.cap = n - below;
      if (family_ == Family::kLenart) {
        // Row bound r-1, and the rest of the row strictly increases.
        const int right = shape.row(cell.row) - cell.col;
        rule.cap = std::min(rule.cap, cell.row - 1 - right);
      }
    }
  }

  bool run() { return place(0); }

 private:
  int floor_for(const CellRule& rule) const {
    int floor = 1;
    if (rule.left >= 0) {
      const int left = t_.entries()[static_cast<std::size_t>(rule.left)].max();
      floor = std::max(floor, family_ == Family::kLenart ? left + 1 : left);
    }
    if (rule.above >= 0) {
      floor = std::max(floor, t_.entries()[static_cast<std::size_t>(rule.above)].max() + 1);
    }
    return floor;
  }

  bool place(std::size_t index) {
    if (index == rules_.size()) return invoke_visitor(visit_, t_);
    const CellRule& rule = rules_[index];
    const int floor = floor_for(rule);
    if (family_ != Family::kSetValued) {
      for (int label = floor; label <= rule.cap; ++label) {
        t_.set(index, LabelSet::singleton(label));
        if (!place(index + 1)) return false;
      }
    } else {
      for (int low = floor; low <= rule.cap; ++low) {
        // {low} together with any subset of (low, cap].
        const int extra = rule.cap - low;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << extra); ++mask) {
          const std::uint32_t bits = (std::uint32_t{1} << low) | (mask << (low + 1));
          t_.set(index, LabelSet::from_bits(bits));
          if (!place(index + 1)) return false;
        }
      }
    }
    t_.set(index, LabelSet{});
    return true;
  }

  Tableau t_;
  Family family_;
  F& visit_;
  std::vector<CellRule> rules_;
};

}  // namespace detail

/// Restartable stream of tableaux. `for_each` re-runs the backtracking
/// search from scratch; the visitor sees a reference to the working tableau,
/// valid only for the duration of the call. A visitor returning `false`
/// stops the search.
class TableauEnumeration {
 public:
  TableauEnumeration(detail::Family family, Partition shape, Partition inner,
                     int n, bool feasible)
      : family_(family),
        shape_(std::move(shape)),
        inner_(std::move(inner)),
        n_(n),
        feasible_(feasible) {}

  template <class F>
  void for_each(F&& visit) const {
    if (!feasible_) return;
    detail::Backtracker<std::remove_reference_t<F>> engine(
        Tableau(shape_, inner_), family_, n_, visit);
    engine.run();
  }

  std::size_t count() const {
    std::size_t total = 0;
    for_each([&](const Tableau&) { ++total; });
    return total;
  }

  std::vector<Tableau> collect() const {
    std::vector<Tableau> out;
    for_each([&](const Tableau& t) { out.push_back(t); });
    return out;
  }

 private:
  detail::Family family_;
  Partition shape_;
  Partition inner_;
  int n_;
  bool feasible_;
};

inline void check_label_range(int n) {
  if (n < 1 || n > kMaxLabel) {
    throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxLabel) + "]");
  }
}

/// Semistandard Young tableaux of shape lambda with entries in [n].
inline TableauEnumeration enumerate_ssyt(const Partition& lambda, int n) {
  check_label_range(n);
  return {detail::Family::kSemistandard, lambda, Partition{}, n, lambda.length() <= n};
}

/// Row- and column-strict fillings of mu/lambda with entries in row r at
/// most r-1 (and in [n]).
inline TableauEnumeration enumerate_lenart_tableaux(const Partition& lambda,
                                                    const Partition& mu, int n) {
  check_label_range(n);
  if (!mu.contains(lambda)) throw std::invalid_argument("not a skew shape");
  return {detail::Family::kLenart, mu, lambda, n, mu.length() <= n};
}

/// Set-valued semistandard fillings of lambda by nonempty subsets of [n].
inline TableauEnumeration enumerate_set_valued(const Partition& lambda, int n) {
  check_label_range(n);
  return {detail::Family::kSetValued, lambda, Partition{}, n, lambda.length() <= n};
}

}  // namespace sgroth

#endif  // SGROTH_TABLEAUX_HPP
