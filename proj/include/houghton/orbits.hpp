#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

/// X_{i,r}: offsets on ray i congruent to r modulo |t_i|.
struct ResidueRay {
  int ray = 1;
  Offset residue = 0;
  Offset modulus = 1;

  friend auto operator<=>(const ResidueRay &, const ResidueRay &) = default;
};

/**
 * An infinite orbit of an element g, indexed by k in Z with
 * point(k + 1) = g(point(k)).
 *
 * Index 0 is the first point of the outgoing tail: for k >= 0 the orbit is
 * (pos_end.ray, pos_cutoff + k * t_i). The spine occupies indices
 * -L..-1 and index -(L + 1) is the last point of the incoming tail,
 * (neg_end.ray, neg_cutoff); earlier indices continue that ray upwards in
 * steps of |t_j|. Both cutoffs are minimal: the orbit enters (leaves) a
 * stretch of pure translation exactly there.
 */
struct InfiniteOrbit {
  ResidueRay pos_end; ///< outgoing end, t_i > 0
  ResidueRay neg_end; ///< incoming end, t_j < 0
  Offset pos_cutoff = 0;
  Offset neg_cutoff = 0;
  std::vector<Point> spine;

  std::int64_t spine_length() const noexcept { return static_cast<std::int64_t>(spine.size()); }
  Point at(std::int64_t index) const;
  std::optional<std::int64_t> index_of(Point p) const;
  bool contains(Point p) const { return index_of(p).has_value(); }

  /// Intercepts of the two tails in the orbit's index: for large k the
  /// orbit is (i, A + k * t_i), for very negative k it is (j, B - k * |t_j|).
  Offset pos_intercept() const noexcept { return pos_cutoff; }
  Offset neg_intercept() const noexcept {
    return neg_cutoff - (spine_length() + 1) * neg_end.modulus;
  }

  friend bool operator==(const InfiniteOrbit &, const InfiniteOrbit &) = default;
};

struct CycleDecomposition {
  /// Each cycle starts at its smallest point; cycles sorted by that point.
  std::vector<std::vector<Point>> finite_cycles;
  /// Sorted by (pos_end.ray, pos_end.residue).
  std::vector<InfiniteOrbit> infinite_orbits;

  /// Image of p under the product of the listed cycles.
  Point apply(Point p) const;

  friend bool operator==(const CycleDecomposition &, const CycleDecomposition &) = default;
};

struct CycleType {
  std::vector<std::size_t> finite_lengths; ///< sorted ascending
  std::size_t infinite_orbits = 0;
  std::optional<std::size_t> fixed_points; ///< nullopt when infinite

  friend bool operator==(const CycleType &, const CycleType &) = default;
};

/// Classes of ~_g on I = {i : t_i(g) != 0}, each sorted, ordered by least ray.
struct EndsPartition {
  std::vector<std::vector<int>> classes;

  /// Index into classes, or -1 for rays outside I.
  int class_of(int ray) const;

  friend bool operator==(const EndsPartition &, const EndsPartition &) = default;
};

CycleDecomposition cycle_decomposition(const HoughtonElement &g);

std::size_t infinite_orbit_count(const HoughtonElement &g);

CycleType cycle_type(const HoughtonElement &g);
CycleType cycle_type(const HoughtonElement &g, const CycleDecomposition &d);

/// Conjugacy in the full symmetric group of X_n.
bool sym_conjugate(const HoughtonElement &a, const HoughtonElement &b);

EndsPartition ends_partition(const HoughtonElement &g);
EndsPartition ends_partition(const HoughtonElement &g, const CycleDecomposition &d);

/// Text forms: "((i,m) (i,m) ...)" and "[(j,s)←tail | spine | tail→(i,r)]".
std::string format_cycle(const std::vector<Point> &cycle);
std::string format_orbit(const InfiniteOrbit &orbit);
std::string format_decomposition(const CycleDecomposition &d);

} // namespace houghton
