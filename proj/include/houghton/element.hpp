#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace houghton {

using Offset = std::int64_t;

/// A point (ray, offset) of X_n. Rays are 1-indexed, offsets start at 0.
struct Point {
  int ray = 1;
  Offset offset = 0;

  friend auto operator<=>(const Point &, const Point &) = default;
};

std::ostream &operator<<(std::ostream &os, const Point &p);
std::string to_string(const Point &p);

/// Eventual translation amounts, one per ray. Entries always sum to zero.
using TranslationVector = std::vector<Offset>;

using Exception = std::pair<Point, Point>;

/// Raised whenever data cannot describe an element of H_n.
class InvalidElement : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Generator ids: 2..n name g_2..g_n, kSwap names the transposition
/// ((1,0),(2,0)) which is only a generator of H_2.
inline constexpr int kSwap = 0;

/**
 * An element of Houghton's group H_n, kept in normal form.
 *
 * The element acts on the right. A point (i, m) that is not listed in the
 * exception table goes to (i, m + t_i); the table lists exactly the points
 * where this tail formula is wrong or undefined (m + t_i < 0). Entries that
 * agree with the tail formula are never stored, so two elements are equal
 * iff their representations are identical.
 */
class HoughtonElement {
public:
  static HoughtonElement identity(int n);
  static HoughtonElement generator(int n, int id);

  /// Builds an element from an arbitrary table; entries agreeing with the
  /// tail formula are dropped. Throws InvalidElement unless the resulting
  /// map is a bijection of X_n.
  static HoughtonElement from_table(int n, TranslationVector t,
                                    std::vector<Exception> table);

  /// Like from_table but rejects tables that are not already minimal.
  static HoughtonElement from_normal_form(int n, TranslationVector t,
                                          std::vector<Exception> table);

  /// Builds the element that sends p to f(p) for every p = (i, m) with
  /// m < limits[i - 1], and acts by the tail formula everywhere else.
  static HoughtonElement from_function(int n, TranslationVector t,
                                       std::span<const Offset> limits,
                                       const std::function<Point(Point)> &f);

  /// Finitely supported permutation given as disjoint cycles.
  static HoughtonElement from_cycles(int n,
                                     const std::vector<std::vector<Point>> &cycles);

  int rays() const noexcept { return n_; }
  const TranslationVector &translation() const noexcept { return t_; }
  Offset translation(int ray) const { return t_[static_cast<std::size_t>(ray - 1)]; }

  /// Exceptions sorted by source point.
  const std::vector<Exception> &exceptions() const noexcept { return table_; }

  bool is_identity() const noexcept;
  bool is_valid_point(Point p) const noexcept;

  Point apply(Point p) const;
  Point operator()(Point p) const { return apply(p); }

  /// Smallest z such that every (ray, m) with m >= z follows the tail formula.
  Offset tail_start(int ray) const;

  /// Strictly larger than every offset occurring in the exception table.
  Offset table_bound() const noexcept;

  friend bool operator==(const HoughtonElement &, const HoughtonElement &) = default;

private:
  HoughtonElement(int n, TranslationVector t, std::vector<Exception> table)
      : n_(n), t_(std::move(t)), table_(std::move(table)) {}

  void validate() const;

  int n_ = 2;
  TranslationVector t_;
  std::vector<Exception> table_;

  friend HoughtonElement compose(const HoughtonElement &, const HoughtonElement &);
  friend HoughtonElement inverse(const HoughtonElement &);
  friend class ElementBuilder;
};

/// Product with the right-action convention: (p)(g*h) = ((p)g)h.
HoughtonElement compose(const HoughtonElement &g, const HoughtonElement &h);
HoughtonElement inverse(const HoughtonElement &g);
bool equals(const HoughtonElement &g, const HoughtonElement &h);

/// g^x = x^-1 g x.
HoughtonElement conjugate_element(const HoughtonElement &g, const HoughtonElement &x);

inline HoughtonElement operator*(const HoughtonElement &g, const HoughtonElement &h) {
  return compose(g, h);
}

Point apply(const HoughtonElement &g, Point p);

void check_rays(int n);
void check_same_rays(const HoughtonElement &g, const HoughtonElement &h);

} // namespace houghton
