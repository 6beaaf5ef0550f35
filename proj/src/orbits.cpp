#include "houghton/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "houghton/disjoint_set.hpp"

namespace houghton {

Point InfiniteOrbit::at(std::int64_t index) const {
  const std::int64_t len = spine_length();
  if (index >= 0)
    return {pos_end.ray, pos_cutoff + index * pos_end.modulus};
  if (index >= -len)
    return spine[static_cast<std::size_t>(index + len)];
  return {neg_end.ray, neg_cutoff + (-(len + 1) - index) * neg_end.modulus};
}

std::optional<std::int64_t> InfiniteOrbit::index_of(Point p) const {
  if (p.ray == pos_end.ray && p.offset >= pos_cutoff &&
      (p.offset - pos_cutoff) % pos_end.modulus == 0)
    return (p.offset - pos_cutoff) / pos_end.modulus;
  if (p.ray == neg_end.ray && p.offset >= neg_cutoff &&
      (p.offset - neg_cutoff) % neg_end.modulus == 0)
    return -(spine_length() + 1) - (p.offset - neg_cutoff) / neg_end.modulus;
  auto it = std::find(spine.begin(), spine.end(), p);
  if (it != spine.end())
    return static_cast<std::int64_t>(it - spine.begin()) - spine_length();
  return std::nullopt;
}

Point CycleDecomposition::apply(Point p) const {
  for (const auto &cycle : finite_cycles) {
    auto it = std::find(cycle.begin(), cycle.end(), p);
    if (it != cycle.end())
      return ++it == cycle.end() ? cycle.front() : *it;
  }
  for (const auto &orbit : infinite_orbits)
    if (auto k = orbit.index_of(p))
      return orbit.at(*k + 1);
  return p;
}

int EndsPartition::class_of(int ray) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::find(classes[c].begin(), classes[c].end(), ray) != classes[c].end())
      return static_cast<int>(c);
  return -1;
}

namespace {

std::vector<Offset> tail_starts(const HoughtonElement &g) {
  std::vector<Offset> z(static_cast<std::size_t>(g.rays()), 0);
  for (const auto &[p, q] : g.exceptions())
    z[static_cast<std::size_t>(p.ray - 1)] = p.offset + 1;
  return z;
}

Offset floor_mod(Offset a, Offset m) {
  const Offset r = a % m;
  return r < 0 ? r + m : r;
}

InfiniteOrbit trace_orbit(const HoughtonElement &g, const HoughtonElement &g_inv,
                          const std::vector<Offset> &z, int ray, Offset residue,
                          std::size_t step_limit) {
  const Offset ti = g.translation(ray);
  const Offset zi = z[static_cast<std::size_t>(ray - 1)];
  // First offset >= zi in the residue class: the forward orbit from there is
  // pure translation along the ray.
  const Offset start = zi + floor_mod(residue - zi, ti);

  std::vector<Point> seq{{ray, start}};
  for (;;) {
    const Point p = seq.back();
    if (g.translation(p.ray) < 0 && p.offset >= z[static_cast<std::size_t>(p.ray - 1)])
      break;
    if (seq.size() > step_limit)
      throw std::logic_error("orbit trace did not reach an incoming tail");
    seq.push_back(g_inv.apply(p));
  }
  std::reverse(seq.begin(), seq.end());

  const int neg_ray = seq.front().ray;
  const Offset tj = g.translation(neg_ray);

  std::size_t first_pos = seq.size() - 1;
  while (first_pos > 0 && seq[first_pos - 1].ray == ray &&
         seq[first_pos].offset == seq[first_pos - 1].offset + ti)
    --first_pos;
  std::size_t last_neg = 0;
  while (last_neg + 1 < first_pos && seq[last_neg + 1].ray == neg_ray &&
         seq[last_neg + 1].offset == seq[last_neg].offset + tj)
    ++last_neg;

  InfiniteOrbit orbit;
  orbit.pos_end = {ray, residue, ti};
  orbit.neg_end = {neg_ray, floor_mod(seq[last_neg].offset, -tj), -tj};
  orbit.pos_cutoff = seq[first_pos].offset;
  orbit.neg_cutoff = seq[last_neg].offset;
  orbit.spine.assign(seq.begin() + static_cast<std::ptrdiff_t>(last_neg) + 1,
                     seq.begin() + static_cast<std::ptrdiff_t>(first_pos));
  return orbit;
}

} // namespace

CycleDecomposition cycle_decomposition(const HoughtonElement &g) {
  const int n = g.rays();
  const auto z = tail_starts(g);
  const HoughtonElement g_inv = inverse(g);

  // Every point that can lie off the stable tails.
  std::set<Point> candidates;
  for (const auto &[p, q] : g.exceptions())
    candidates.insert(p);
  for (int i = 1; i <= n; ++i)
    if (g.translation(i) != 0)
      for (Offset m = 0; m < z[static_cast<std::size_t>(i - 1)]; ++m)
        candidates.insert({i, m});

  std::size_t step_limit = candidates.size() + 4;
  for (int i = 1; i <= n; ++i)
    step_limit += static_cast<std::size_t>(std::abs(g.translation(i)));

  CycleDecomposition d;
  for (int i = 1; i <= n; ++i)
    for (Offset r = 0; r < g.translation(i); ++r)
      d.infinite_orbits.push_back(trace_orbit(g, g_inv, z, i, r, step_limit));

  std::set<Point> visited;
  for (const Point &p : candidates) {
    if (visited.contains(p) || g.apply(p) == p)
      continue;
    std::vector<Point> cycle{p};
    Point q = g.apply(p);
    while (q != p && candidates.contains(q) && !visited.contains(q)) {
      cycle.push_back(q);
      q = g.apply(q);
    }
    visited.insert(cycle.begin(), cycle.end());
    if (q == p)
      d.finite_cycles.push_back(std::move(cycle));
  }
  return d;
}

std::size_t infinite_orbit_count(const HoughtonElement &g) {
  Offset mass = 0;
  for (Offset x : g.translation())
    mass += std::abs(x);
  if (mass % 2 != 0)
    throw std::logic_error("odd translation mass; translation vector cannot sum to zero");
  return static_cast<std::size_t>(mass / 2);
}

CycleType cycle_type(const HoughtonElement &g, const CycleDecomposition &d) {
  CycleType ct;
  for (const auto &c : d.finite_cycles)
    ct.finite_lengths.push_back(c.size());
  std::sort(ct.finite_lengths.begin(), ct.finite_lengths.end());
  ct.infinite_orbits = d.infinite_orbits.size();
  const auto &t = g.translation();
  if (std::none_of(t.begin(), t.end(), [](Offset x) { return x == 0; })) {
    // Off the table every point is translated, so only table entries can be fixed.
    std::size_t fixed = 0;
    for (const auto &[p, q] : g.exceptions())
      fixed += p == q ? 1 : 0;
    ct.fixed_points = fixed;
  }
  return ct;
}

CycleType cycle_type(const HoughtonElement &g) { return cycle_type(g, cycle_decomposition(g)); }

// Two permutations of a countable set are conjugate in Sym iff they have the
// same number of cycles of each length, counting infinite cycles and fixed
// points too. Fixed sets are countably infinite exactly when some ray has
// zero translation, and finite (and counted) otherwise.
bool sym_conjugate(const HoughtonElement &a, const HoughtonElement &b) {
  check_same_rays(a, b);
  return cycle_type(a) == cycle_type(b);
}

EndsPartition ends_partition(const HoughtonElement &g, const CycleDecomposition &d) {
  const int n = g.rays();
  DisjointSet uf(static_cast<std::size_t>(n));
  for (const auto &orbit : d.infinite_orbits)
    uf.unite(static_cast<std::size_t>(orbit.pos_end.ray - 1),
             static_cast<std::size_t>(orbit.neg_end.ray - 1));

  std::map<std::size_t, std::vector<int>> by_root;
  for (int i = 1; i <= n; ++i)
    if (g.translation(i) != 0)
      by_root[uf.find(static_cast<std::size_t>(i - 1))].push_back(i);

  EndsPartition ends;
  for (auto &[root, rays] : by_root)
    ends.classes.push_back(std::move(rays));
  std::sort(ends.classes.begin(), ends.classes.end());
  return ends;
}

EndsPartition ends_partition(const HoughtonElement &g) {
  return ends_partition(g, cycle_decomposition(g));
}

std::string format_cycle(const std::vector<Point> &cycle) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < cycle.size(); ++k)
    os << (k ? " " : "") << cycle[k];
  os << ')';
  return os.str();
}

std::string format_orbit(const InfiniteOrbit &orbit) {
  std::ostringstream os;
  os << '[' << Point{orbit.neg_end.ray, orbit.neg_end.residue} << "←tail |";
  for (const Point &p : orbit.spine)
    os << ' ' << p;
  os << " | tail→" << Point{orbit.pos_end.ray, orbit.pos_end.residue} << ']';
  return os.str();
}

std::string format_decomposition(const CycleDecomposition &d) {
  if (d.finite_cycles.empty() && d.infinite_orbits.empty())
    return "()\n";
  std::string out;
  for (const auto &c : d.finite_cycles)
    out += format_cycle(c) + "\n";
  for (const auto &o : d.infinite_orbits)
    out += format_orbit(o) + "\n";
  return out;
}

} // namespace houghton
