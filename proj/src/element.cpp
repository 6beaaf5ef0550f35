#include "houghton/element.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "element_builder.hpp"

namespace houghton {

std::ostream &operator<<(std::ostream &os, const Point &p) {
  return os << '(' << p.ray << ',' << p.offset << ')';
}

std::string to_string(const Point &p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

void check_rays(int n) {
  if (n < 2)
    throw InvalidElement("number of rays must be at least 2, got " + std::to_string(n));
}

void check_same_rays(const HoughtonElement &g, const HoughtonElement &h) {
  if (g.rays() != h.rays())
    throw InvalidElement("elements act on different ray counts (" + std::to_string(g.rays()) +
                         " vs " + std::to_string(h.rays()) + ")");
}

namespace {

bool by_source(const Exception &a, const Exception &b) { return a.first < b.first; }

const Exception *find_source(const std::vector<Exception> &table, Point p) {
  auto it = std::lower_bound(table.begin(), table.end(), p,
                             [](const Exception &e, Point q) { return e.first < q; });
  if (it != table.end() && it->first == p)
    return &*it;
  return nullptr;
}

// Drops entries that agree with the tail formula. Expects a source-sorted table.
void drop_tail_entries(const TranslationVector &t, std::vector<Exception> &table) {
  std::erase_if(table, [&](const Exception &e) {
    const Offset image = e.first.offset + t[static_cast<std::size_t>(e.first.ray - 1)];
    return image >= 0 && e.second == Point{e.first.ray, image};
  });
}

} // namespace

HoughtonElement ElementBuilder::unchecked(int n, TranslationVector t,
                                          std::vector<Exception> table) {
  std::sort(table.begin(), table.end(), by_source);
  drop_tail_entries(t, table);
  HoughtonElement g(n, std::move(t), std::move(table));
#ifndef NDEBUG
  g.validate();
#endif
  return g;
}

HoughtonElement HoughtonElement::identity(int n) {
  check_rays(n);
  return HoughtonElement(n, TranslationVector(static_cast<std::size_t>(n), 0), {});
}

HoughtonElement HoughtonElement::generator(int n, int id) {
  check_rays(n);
  TranslationVector t(static_cast<std::size_t>(n), 0);
  if (id == kSwap) {
    if (n != 2)
      throw InvalidElement("the transposition s is a generator only for n = 2");
    return HoughtonElement(n, std::move(t), {{{1, 0}, {2, 0}}, {{2, 0}, {1, 0}}});
  }
  if (id < 2 || id > n)
    throw InvalidElement("generator g" + std::to_string(id) + " does not exist for n = " +
                         std::to_string(n));
  // (i,0) -> (1,0); everything else on rays 1 and i is the tail formula.
  t[0] = 1;
  t[static_cast<std::size_t>(id - 1)] = -1;
  return HoughtonElement(n, std::move(t), {{{id, 0}, {1, 0}}});
}

HoughtonElement HoughtonElement::from_table(int n, TranslationVector t,
                                            std::vector<Exception> table) {
  check_rays(n);
  if (t.size() != static_cast<std::size_t>(n))
    throw InvalidElement("translation vector has " + std::to_string(t.size()) +
                         " entries, expected " + std::to_string(n));
  std::sort(table.begin(), table.end(), by_source);
  for (const auto &[p, q] : table) {
    if (p.ray < 1 || p.ray > n || p.offset < 0)
      throw InvalidElement("exception source " + to_string(p) + " is not a point of X_" +
                           std::to_string(n));
  }
  drop_tail_entries(t, table);
  HoughtonElement g(n, std::move(t), std::move(table));
  g.validate();
  return g;
}

HoughtonElement HoughtonElement::from_normal_form(int n, TranslationVector t,
                                                  std::vector<Exception> table) {
  check_rays(n);
  if (t.size() != static_cast<std::size_t>(n))
    throw InvalidElement("translation vector has " + std::to_string(t.size()) +
                         " entries, expected " + std::to_string(n));
  for (const auto &[p, q] : table) {
    if (p.ray < 1 || p.ray > n || p.offset < 0)
      throw InvalidElement("exception source " + to_string(p) + " is not a point of X_" +
                           std::to_string(n));
    const Offset image = p.offset + t[static_cast<std::size_t>(p.ray - 1)];
    if (image >= 0 && q == Point{p.ray, image})
      throw InvalidElement("exception " + to_string(p) + " -> " + to_string(q) +
                           " agrees with the tail formula (table not minimal)");
  }
  std::sort(table.begin(), table.end(), by_source);
  HoughtonElement g(n, std::move(t), std::move(table));
  g.validate();
  return g;
}

HoughtonElement HoughtonElement::from_function(int n, TranslationVector t,
                                               std::span<const Offset> limits,
                                               const std::function<Point(Point)> &f) {
  check_rays(n);
  if (limits.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("from_function: one limit per ray required");
  std::vector<Exception> table;
  for (int i = 1; i <= n; ++i)
    for (Offset m = 0; m < limits[static_cast<std::size_t>(i - 1)]; ++m)
      table.push_back({{i, m}, f({i, m})});
  return from_table(n, std::move(t), std::move(table));
}

HoughtonElement HoughtonElement::from_cycles(int n,
                                             const std::vector<std::vector<Point>> &cycles) {
  std::vector<Exception> table;
  for (const auto &cycle : cycles)
    for (std::size_t k = 0; k < cycle.size(); ++k)
      table.push_back({cycle[k], cycle[(k + 1) % cycle.size()]});
  std::sort(table.begin(), table.end(), by_source);
  for (std::size_t k = 1; k < table.size(); ++k)
    if (table[k - 1].first == table[k].first)
      throw InvalidElement("point " + to_string(table[k].first) +
                           " appears in more than one cycle position");
  return from_table(n, TranslationVector(static_cast<std::size_t>(n), 0), std::move(table));
}

bool HoughtonElement::is_identity() const noexcept {
  return table_.empty() && std::all_of(t_.begin(), t_.end(), [](Offset x) { return x == 0; });
}

bool HoughtonElement::is_valid_point(Point p) const noexcept {
  return p.ray >= 1 && p.ray <= n_ && p.offset >= 0;
}

Point HoughtonElement::apply(Point p) const {
  if (!is_valid_point(p))
    throw InvalidElement("point " + to_string(p) + " is not in X_" + std::to_string(n_));
  if (const Exception *e = find_source(table_, p))
    return e->second;
  return {p.ray, p.offset + translation(p.ray)};
}

Offset HoughtonElement::tail_start(int ray) const {
  Offset z = 0;
  for (const auto &[p, q] : table_)
    if (p.ray == ray)
      z = std::max(z, p.offset + 1);
  return z;
}

Offset HoughtonElement::table_bound() const noexcept {
  Offset bound = 0;
  for (const auto &[p, q] : table_)
    bound = std::max({bound, p.offset + 1, q.offset + 1});
  return bound;
}

void HoughtonElement::validate() const {
  check_rays(n_);
  if (t_.size() != static_cast<std::size_t>(n_))
    throw InvalidElement("translation vector length differs from n");
  if (std::accumulate(t_.begin(), t_.end(), Offset{0}) != 0)
    throw InvalidElement("translation vector does not sum to zero");

  for (std::size_t k = 0; k < table_.size(); ++k) {
    const auto &[p, q] = table_[k];
    if (!is_valid_point(p) || !is_valid_point(q))
      throw InvalidElement("exception " + to_string(p) + " -> " + to_string(q) +
                           " leaves X_" + std::to_string(n_));
    if (k > 0 && table_[k - 1].first == p)
      throw InvalidElement("point " + to_string(p) + " has two images");
  }

  auto in_domain = [&](Point p) { return find_source(table_, p) != nullptr; };

  // The tail formula is undefined below -t_i on shrinking rays.
  for (int i = 1; i <= n_; ++i)
    for (Offset m = 0; m < -translation(i); ++m)
      if (!in_domain({i, m}))
        throw InvalidElement("point " + to_string(Point{i, m}) +
                             " has no image (tail formula leaves the ray)");

  std::vector<Point> range;
  range.reserve(table_.size());
  for (const auto &e : table_)
    range.push_back(e.second);
  std::sort(range.begin(), range.end());
  auto in_range = [&](Point p) { return std::binary_search(range.begin(), range.end(), p); };

  // Injectivity: distinct table images, none also reached by a tail point.
  for (std::size_t k = 0; k < range.size(); ++k) {
    const Point q = range[k];
    if (k > 0 && range[k - 1] == q)
      throw InvalidElement("not injective: two points map to " + to_string(q));
    const Point pre{q.ray, q.offset - translation(q.ray)};
    if (pre.offset >= 0 && !in_domain(pre))
      throw InvalidElement("not injective: " + to_string(q) +
                           " is an exception image and the tail image of " + to_string(pre));
  }

  // Surjectivity: every point without a tail preimage must be a table image.
  for (int i = 1; i <= n_; ++i)
    for (Offset k = 0; k < translation(i); ++k)
      if (!in_range({i, k}))
        throw InvalidElement("not surjective: " + to_string(Point{i, k}) + " has no preimage");
  for (const auto &[p, q] : table_) {
    const Point tail{p.ray, p.offset + translation(p.ray)};
    if (tail.offset >= 0 && !in_range(tail))
      throw InvalidElement("not surjective: " + to_string(tail) + " has no preimage");
  }
}

Point apply(const HoughtonElement &g, Point p) { return g.apply(p); }

HoughtonElement compose(const HoughtonElement &g, const HoughtonElement &h) {
  check_same_rays(g, h);
  const int n = g.rays();
  std::vector<Offset> zg(static_cast<std::size_t>(n), 0), zh(static_cast<std::size_t>(n), 0);
  for (const auto &[p, q] : g.table_)
    zg[static_cast<std::size_t>(p.ray - 1)] = p.offset + 1;
  for (const auto &[p, q] : h.table_)
    zh[static_cast<std::size_t>(p.ray - 1)] = p.offset + 1;

  TranslationVector t(static_cast<std::size_t>(n));
  std::vector<Exception> table;
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    t[k] = g.t_[k] + h.t_[k];
    // Beyond this limit (i,m)g stays on ray i inside h's tail region.
    const Offset limit = std::max({Offset{0}, zg[k], zh[k] - g.t_[k]});
    for (Offset m = 0; m < limit; ++m)
      table.push_back({{i, m}, h.apply(g.apply({i, m}))});
  }
  return ElementBuilder::unchecked(n, std::move(t), std::move(table));
}

HoughtonElement inverse(const HoughtonElement &g) {
  TranslationVector t(g.t_.size());
  std::transform(g.t_.begin(), g.t_.end(), t.begin(), [](Offset x) { return -x; });
  std::vector<Exception> table;
  table.reserve(g.table_.size());
  for (const auto &[p, q] : g.table_)
    table.push_back({q, p});
  return ElementBuilder::unchecked(g.rays(), std::move(t), std::move(table));
}

bool equals(const HoughtonElement &g, const HoughtonElement &h) {
  check_same_rays(g, h);
  return g == h;
}

HoughtonElement conjugate_element(const HoughtonElement &g, const HoughtonElement &x) {
  return compose(compose(inverse(x), g), x);
}

} // namespace houghton
