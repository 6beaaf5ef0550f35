#include "houghton/conjugacy.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <queue>

#include <json.hpp>

#include "houghton/serialize.hpp"

namespace houghton {

std::string_view to_string(Refutation r) {
  switch (r) {
  case Refutation::TranslationMismatch:
    return "translation-mismatch";
  case Refutation::SupportCountMismatch:
    return "support-count-mismatch";
  case Refutation::CycleTypeMismatch:
    return "cycle-type-mismatch";
  case Refutation::ForcedMapInconsistent:
    return "forced-map-inconsistent";
  case Refutation::ExhaustedBoundedSearch:
    return "exhausted-bounded-search";
  }
  return "unknown";
}

std::optional<Refutation> refutation_from_string(std::string_view tag) {
  for (auto r : {Refutation::TranslationMismatch, Refutation::SupportCountMismatch,
                 Refutation::CycleTypeMismatch, Refutation::ForcedMapInconsistent,
                 Refutation::ExhaustedBoundedSearch})
    if (to_string(r) == tag)
      return r;
  return std::nullopt;
}

BoundData merge(const BoundData &x, const BoundData &y) {
  return {std::max(x.K, y.K), std::max(x.M, y.M), std::max(x.N, y.N)};
}

namespace {

std::optional<BoundData> merge(const std::optional<BoundData> &x,
                               const std::optional<BoundData> &y) {
  if (!x)
    return y;
  if (!y)
    return x;
  return merge(*x, *y);
}

} // namespace

ConjugacyOutcome ConjugacyOutcome::conjugate(HoughtonElement x, bool verified,
                                             std::optional<BoundData> bounds) {
  ConjugacyOutcome out;
  out.conjugator_ = std::move(x);
  out.verified_ = verified;
  out.bounds_ = bounds;
  return out;
}

ConjugacyOutcome ConjugacyOutcome::not_conjugate(Refutation reason,
                                                 std::optional<BoundData> bounds) {
  ConjugacyOutcome out;
  out.reason_ = reason;
  out.bounds_ = bounds;
  return out;
}

ConjugacyOutcome ConjugacyOutcome::with_bounds(std::optional<BoundData> b) const {
  ConjugacyOutcome out = *this;
  out.bounds_ = b;
  return out;
}

std::string serialize(const ConjugacyOutcome &outcome) {
  nlohmann::ordered_json doc;
  doc["decision"] = outcome.is_conjugate() ? "yes" : "no";
  if (outcome.is_conjugate())
    doc["certificate"] = nlohmann::ordered_json::parse(serialize(outcome.conjugator()));
  else
    doc["reason"] = std::string(to_string(outcome.reason()));
  if (const auto &b = outcome.bounds())
    doc["bounds"] = {{"K", b->K}, {"M", b->M}, {"N", b->N}};
  return doc.dump() + "\n";
}

bool verify(const HoughtonElement &a, const HoughtonElement &b, const HoughtonElement &x) {
  check_same_rays(a, b);
  check_same_rays(a, x);
  // x^-1 a x = b  <=>  a x = x b
  return compose(a, x) == compose(x, b);
}

namespace {

std::vector<Offset> tail_starts(const HoughtonElement &g) {
  std::vector<Offset> z(static_cast<std::size_t>(g.rays()), 0);
  for (const auto &[p, q] : g.exceptions())
    z[static_cast<std::size_t>(p.ray - 1)] = p.offset + 1;
  return z;
}

// For a matched orbit pair, every conjugator x with t_k(x) = l_k |t_k| on
// the two end rays satisfies l_pos + l_neg = D. Aligning the orbits' index
// parametrizations at both tails gives D exactly.
Offset alignment_defect(const InfiniteOrbit &oa, const InfiniteOrbit &ob) {
  return (ob.pos_intercept() - oa.pos_intercept()) / oa.pos_end.modulus +
         (ob.neg_intercept() - oa.neg_intercept()) / oa.neg_end.modulus;
}

struct OrbitEdge {
  int pos_ray;
  int neg_ray;
  Offset defect;
};

// Matches the infinite orbits of a and b by end residues. nullopt when some
// orbit of a has no counterpart in b with the same ends.
std::optional<std::vector<OrbitEdge>> match_orbits(const CycleDecomposition &da,
                                                   const CycleDecomposition &db) {
  if (da.infinite_orbits.size() != db.infinite_orbits.size())
    return std::nullopt;
  std::vector<OrbitEdge> edges;
  for (std::size_t k = 0; k < da.infinite_orbits.size(); ++k) {
    const auto &oa = da.infinite_orbits[k];
    const auto &ob = db.infinite_orbits[k];
    if (oa.pos_end != ob.pos_end || oa.neg_end != ob.neg_end)
      return std::nullopt;
    edges.push_back({oa.pos_end.ray, oa.neg_end.ray, alignment_defect(oa, ob)});
  }
  return edges;
}

// Solution of the edge constraints l_i + l_j = D within one ~_a class:
// l_ray = sign[ray] * lambda + shift[ray], lambda = l_root.
struct ClassSolution {
  std::vector<int> rays;
  std::map<int, int> sign;
  std::map<int, Offset> shift;
  std::map<int, Offset> depth; ///< BFS depth from the bound representative
};

struct PairAnalysis {
  std::vector<OrbitEdge> edges;
  std::vector<ClassSolution> classes;
  bool consistent = true;
  BoundData bounds;
};

std::map<int, std::vector<std::pair<int, Offset>>> adjacency(const std::vector<OrbitEdge> &edges) {
  std::map<int, std::vector<std::pair<int, Offset>>> adj;
  for (const auto &e : edges) {
    adj[e.pos_ray].push_back({e.neg_ray, e.defect});
    adj[e.neg_ray].push_back({e.pos_ray, e.defect});
  }
  return adj;
}

std::map<int, Offset> bfs_depths(int root,
                                 const std::map<int, std::vector<std::pair<int, Offset>>> &adj) {
  std::map<int, Offset> depth{{root, 0}};
  std::queue<int> queue;
  queue.push(root);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const auto &[v, d] : adj.at(u))
      if (!depth.contains(v)) {
        depth[v] = depth[u] + 1;
        queue.push(v);
      }
  }
  return depth;
}

std::optional<PairAnalysis> analyze(const HoughtonElement &a, const CycleDecomposition &da,
                                    const CycleDecomposition &db) {
  auto edges = match_orbits(da, db);
  if (!edges)
    return std::nullopt;

  PairAnalysis pa;
  pa.edges = std::move(*edges);
  const auto adj = adjacency(pa.edges);
  const EndsPartition ends = ends_partition(a, da);

  Offset K = 0;
  for (const auto &e : pa.edges)
    K = std::max(K, std::abs(e.defect));
  Offset M = 0;
  for (Offset x : a.translation())
    M = std::max(M, std::abs(x));

  // Per class: the representative minimizing sum depth * |t| gives the
  // tightest bound from |l_j| <= depth_j * K.
  Offset weight = 0;
  for (const auto &cls : ends.classes) {
    ClassSolution sol;
    sol.rays = cls;
    Offset best = -1;
    for (int root : cls) {
      auto depth = bfs_depths(root, adj);
      Offset w = 0;
      for (const auto &[ray, dep] : depth)
        w += dep * std::abs(a.translation(ray));
      if (best < 0 || w < best) {
        best = w;
        sol.depth = std::move(depth);
      }
    }
    weight += best;

    const int root = cls.front();
    sol.sign[root] = 1;
    sol.shift[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const auto &[v, d] : adj.at(u)) {
        if (!sol.sign.contains(v)) {
          sol.sign[v] = -sol.sign[u];
          sol.shift[v] = d - sol.shift[u];
          queue.push(v);
        } else if (sol.sign[v] != -sol.sign[u] || sol.shift[v] + sol.shift[u] != d) {
          pa.consistent = false;
        }
      }
    }
    pa.classes.push_back(std::move(sol));
  }

  const Offset n = a.rays();
  pa.bounds = {K, M, 2 * std::max(n * K * M, K * weight) + 1};
  return pa;
}

struct TupleEnumerator {
  const HoughtonElement &a;
  const PairAnalysis &pa;
  Offset N;
  std::vector<int> free_rays;
  // Per class: (cost, contribution) for every admissible lambda.
  std::vector<std::vector<std::pair<Offset, TranslationVector>>> class_options;
  std::vector<TranslationVector> out;

  TupleEnumerator(const HoughtonElement &a_, const PairAnalysis &pa_)
      : a(a_), pa(pa_), N(pa_.bounds.N) {
    const int n = a.rays();
    for (int i = 1; i <= n; ++i)
      if (a.translation(i) == 0)
        free_rays.push_back(i);
    for (const auto &cls : pa.classes) {
      auto &options = class_options.emplace_back();
      // The root has sign +1 and shift 0, so |lambda| * |t_root| < N.
      for (Offset lambda = -N; lambda <= N; ++lambda) {
        TranslationVector s(static_cast<std::size_t>(n), 0);
        Offset cost = 0;
        for (int ray : cls.rays) {
          const Offset l = cls.sign.at(ray) * lambda + cls.shift.at(ray);
          const Offset v = l * std::abs(a.translation(ray));
          s[static_cast<std::size_t>(ray - 1)] = v;
          cost += std::abs(v);
        }
        if (cost < N)
          options.push_back({cost, std::move(s)});
      }
    }
  }

  void over_classes(std::size_t c, TranslationVector &acc, Offset cost) {
    if (c == class_options.size()) {
      over_free(0, acc, cost);
      return;
    }
    for (const auto &[ccost, contrib] : class_options[c]) {
      if (cost + ccost >= N)
        continue;
      for (std::size_t k = 0; k < acc.size(); ++k)
        acc[k] += contrib[k];
      over_classes(c + 1, acc, cost + ccost);
      for (std::size_t k = 0; k < acc.size(); ++k)
        acc[k] -= contrib[k];
    }
  }

  void over_free(std::size_t f, TranslationVector &acc, Offset cost) {
    const Offset sum = std::accumulate(acc.begin(), acc.end(), Offset{0});
    if (free_rays.empty()) {
      if (sum == 0)
        out.push_back(acc);
      return;
    }
    auto &slot = acc[static_cast<std::size_t>(free_rays[f] - 1)];
    if (f + 1 == free_rays.size()) {
      if (cost + std::abs(sum) < N) {
        slot = -sum;
        out.push_back(acc);
        slot = 0;
      }
      return;
    }
    const Offset room = N - 1 - cost;
    for (Offset v = -room; v <= room; ++v) {
      slot = v;
      over_free(f + 1, acc, cost + std::abs(v));
    }
    slot = 0;
  }

  std::vector<TranslationVector> run() {
    TranslationVector acc(static_cast<std::size_t>(a.rays()), 0);
    over_classes(0, acc, 0);
    auto key = [](const TranslationVector &s) {
      Offset mass = 0;
      for (Offset x : s)
        mass += std::abs(x);
      return mass;
    };
    std::sort(out.begin(), out.end(), [&](const auto &x, const auto &y) {
      const Offset kx = key(x), ky = key(y);
      return kx != ky ? kx < ky : x < y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return std::move(out);
  }
};

} // namespace

ConjugacyOutcome fsym_conjugate(const HoughtonElement &a, const HoughtonElement &b) {
  check_same_rays(a, b);
  const int n = a.rays();
  if (a.translation() != b.translation())
    return ConjugacyOutcome::not_conjugate(Refutation::TranslationMismatch);

  const CycleDecomposition da = cycle_decomposition(a), db = cycle_decomposition(b);
  if (cycle_type(a, da) != cycle_type(b, db))
    return ConjugacyOutcome::not_conjugate(Refutation::CycleTypeMismatch);

  // Beyond max(z_a, z_b) on each ray both act by the same translation, so the
  // supports only differ below it.
  const auto za = tail_starts(a), zb = tail_starts(b);
  std::vector<Point> a_only, b_only;
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    for (Offset m = 0; m < std::max(za[k], zb[k]); ++m) {
      const Point p{i, m};
      const bool moved_a = a.apply(p) != p, moved_b = b.apply(p) != p;
      if (moved_a && !moved_b)
        a_only.push_back(p);
      else if (moved_b && !moved_a)
        b_only.push_back(p);
    }
  }
  if (a_only.size() != b_only.size())
    return ConjugacyOutcome::not_conjugate(Refutation::SupportCountMismatch);

  std::vector<Exception> table;

  // A finitely supported x is the identity far out, which pins how it maps
  // each infinite orbit of a onto the matching orbit of b.
  for (std::size_t k = 0; k < da.infinite_orbits.size(); ++k) {
    const auto &oa = da.infinite_orbits[k];
    const auto &ob = db.infinite_orbits[k];
    if (oa.neg_end != ob.neg_end || alignment_defect(oa, ob) != 0)
      return ConjugacyOutcome::not_conjugate(Refutation::ForcedMapInconsistent);
    const std::int64_t c = (oa.pos_intercept() - ob.pos_intercept()) / oa.pos_end.modulus;
    const std::int64_t lo = std::min(-(oa.spine_length() + 1), -(ob.spine_length() + 1) - c);
    const std::int64_t hi = std::max<std::int64_t>(0, -c);
    for (std::int64_t idx = lo; idx <= hi; ++idx)
      table.push_back({oa.at(idx), ob.at(idx + c)});
  }

  // Finite cycles of equal length, matched in order, aligned at their least points.
  std::map<std::size_t, std::vector<const std::vector<Point> *>> b_by_length;
  for (const auto &cycle : db.finite_cycles)
    b_by_length[cycle.size()].push_back(&cycle);
  std::map<std::size_t, std::size_t> used;
  for (const auto &cycle : da.finite_cycles) {
    const auto &target = *b_by_length[cycle.size()][used[cycle.size()]++];
    for (std::size_t k = 0; k < cycle.size(); ++k)
      table.push_back({cycle[k], target[k]});
  }

  // Fix(a) - Fix(b) is supp(b) - supp(a) and must land on supp(a) - supp(b).
  for (std::size_t k = 0; k < b_only.size(); ++k)
    table.push_back({b_only[k], a_only[k]});

  HoughtonElement x =
      HoughtonElement::from_table(n, TranslationVector(static_cast<std::size_t>(n), 0), table);
  if (!verify(a, b, x))
    throw std::logic_error("fsym_conjugate built a certificate that does not verify");
  return ConjugacyOutcome::conjugate(std::move(x), true);
}

ConjugacyOutcome coset_reduce(const Solver &solver, std::span<const HoughtonElement> reps,
                              const HoughtonElement &a, const HoughtonElement &b,
                              unsigned jobs) {
  std::optional<BoundData> seen;
  auto attempt = [&](const HoughtonElement &z) { return solver(a, conjugate_element(b, z)); };
  auto finish = [&](const ConjugacyOutcome &out, const HoughtonElement &z) {
    HoughtonElement x = compose(out.conjugator(), inverse(z));
    const bool ok = verify(a, b, x);
    return ConjugacyOutcome::conjugate(std::move(x), ok, out.bounds());
  };

  const std::size_t block = std::max(1u, jobs);
  for (std::size_t start = 0; start < reps.size(); start += block) {
    const std::size_t stop = std::min(reps.size(), start + block);
    std::vector<ConjugacyOutcome> results;
    if (block == 1) {
      results.push_back(attempt(reps[start]));
    } else {
      std::vector<std::future<ConjugacyOutcome>> futures;
      for (std::size_t k = start; k < stop; ++k)
        futures.push_back(std::async(std::launch::async, attempt, std::cref(reps[k])));
      for (auto &f : futures)
        results.push_back(f.get());
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (results[k].is_conjugate())
        return finish(results[k], reps[start + k]);
      seen = merge(seen, results[k].bounds());
    }
  }
  return ConjugacyOutcome::not_conjugate(Refutation::ExhaustedBoundedSearch, seen);
}

HoughtonElement centralizer_element(const HoughtonElement &g, const std::vector<int> &ends_class) {
  const CycleDecomposition d = cycle_decomposition(g);
  const EndsPartition ends = ends_partition(g, d);
  std::vector<int> cls = ends_class;
  std::sort(cls.begin(), cls.end());
  if (std::find(ends.classes.begin(), ends.classes.end(), cls) == ends.classes.end())
    throw std::invalid_argument("rays do not form an equivalence class of ~_g");

  const int n = g.rays();
  std::vector<const InfiniteOrbit *> chosen;
  for (const auto &orbit : d.infinite_orbits)
    if (std::binary_search(cls.begin(), cls.end(), orbit.pos_end.ray))
      chosen.push_back(&orbit);

  TranslationVector t(static_cast<std::size_t>(n), 0);
  for (int ray : cls)
    t[static_cast<std::size_t>(ray - 1)] = g.translation(ray);

  // Past this offset every chosen orbit is in its tails and g is a translation.
  Offset window = g.table_bound();
  for (const auto *orbit : chosen) {
    window = std::max({window, orbit->pos_cutoff, orbit->neg_cutoff});
    for (const Point &p : orbit->spine)
      window = std::max(window, p.offset);
  }
  for (Offset x : g.translation())
    window += std::abs(x);
  window += 1;

  const std::vector<Offset> limits(static_cast<std::size_t>(n), window);
  return HoughtonElement::from_function(n, std::move(t), limits, [&](Point p) {
    for (const auto *orbit : chosen)
      if (orbit->contains(p))
        return g.apply(p);
    return p;
  });
}

HoughtonElement construct_translation_element(int n, const TranslationVector &w,
                                              std::span<const Point> forbidden) {
  check_rays(n);
  if (w.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("translation tuple has the wrong length");
  if (std::accumulate(w.begin(), w.end(), Offset{0}) != 0)
    throw std::invalid_argument("translation tuple must sum to zero");

  Offset h = 0;
  for (const Point &p : forbidden)
    h = std::max(h, p.offset + 1);

  TranslationVector rest = w;
  HoughtonElement result = HoughtonElement::identity(n);
  std::size_t i = 0, j = 0;
  for (;;) {
    while (i < rest.size() && rest[i] <= 0)
      ++i;
    while (j < rest.size() && rest[j] >= 0)
      ++j;
    if (i == rest.size() || j == rest.size())
      break;
    const Offset d = std::min(rest[i], -rest[j]);
    const int to = static_cast<int>(i) + 1, from = static_cast<int>(j) + 1;

    // Ray `to` moves up by d from offset h, ray `from` moves down by d and
    // its first d points at or above h cross over; everything below h stays.
    TranslationVector t(static_cast<std::size_t>(n), 0);
    t[i] = d;
    t[j] = -d;
    std::vector<Exception> table;
    for (Offset m = 0; m < h; ++m) {
      table.push_back({{to, m}, {to, m}});
      table.push_back({{from, m}, {from, m}});
    }
    for (Offset k = 0; k < d; ++k)
      table.push_back({{from, h + k}, {to, h + k}});
    result = compose(result, HoughtonElement::from_table(n, std::move(t), std::move(table)));
    rest[i] -= d;
    rest[j] += d;
  }
  return result;
}

BoundData compute_bounds(const HoughtonElement &a, const HoughtonElement &b) {
  check_same_rays(a, b);
  if (a.translation() != b.translation())
    throw StructuralMismatch("translation vectors differ");
  const auto pa = analyze(a, cycle_decomposition(a), cycle_decomposition(b));
  if (!pa)
    throw StructuralMismatch("some infinite orbit of a has no counterpart in b");
  return pa->bounds;
}

std::uint64_t search_space_size(int n, Offset N) {
  // Tuples with sum 0 and sum |s| = 2h: choose p positive and q negative
  // coordinates, then compositions of h into p and into q parts.
  using u128 = unsigned __int128;
  const u128 cap = std::numeric_limits<std::uint64_t>::max();
  auto binom = [&](Offset top, Offset k) -> u128 {
    if (k < 0 || top < k)
      return 0;
    u128 r = 1;
    for (Offset x = 1; x <= k; ++x) {
      r = r * static_cast<u128>(top - k + x) / static_cast<u128>(x);
      if (r > cap)
        return cap;
    }
    return r;
  };
  u128 total = N > 0 ? 1 : 0;
  for (Offset h = 1; 2 * h < N; ++h)
    for (Offset p = 1; p <= n; ++p)
      for (Offset q = 1; p + q <= n; ++q) {
        const u128 term = binom(n, p) * binom(n - p, q) * binom(h - 1, p - 1) * binom(h - 1, q - 1);
        total = std::min(cap, total + std::min(cap, term));
      }
  return static_cast<std::uint64_t>(total);
}

std::vector<TranslationVector> mod_zero_candidates(const HoughtonElement &a,
                                                   const HoughtonElement &b) {
  check_same_rays(a, b);
  if (a.translation() != b.translation())
    return {};
  const auto pa = analyze(a, cycle_decomposition(a), cycle_decomposition(b));
  if (!pa || !pa->consistent)
    return {};
  return TupleEnumerator(a, *pa).run();
}

ConjugacyOutcome conjugate_mod_zero(const HoughtonElement &a, const HoughtonElement &b,
                                    const SolverOptions &options) {
  check_same_rays(a, b);
  if (a.translation() != b.translation())
    return ConjugacyOutcome::not_conjugate(Refutation::TranslationMismatch);
  const CycleDecomposition da = cycle_decomposition(a), db = cycle_decomposition(b);
  if (cycle_type(a, da) != cycle_type(b, db))
    return ConjugacyOutcome::not_conjugate(Refutation::CycleTypeMismatch);
  const auto pa = analyze(a, da, db);
  if (!pa)
    return ConjugacyOutcome::not_conjugate(Refutation::ForcedMapInconsistent);
  if (!pa->consistent)
    return ConjugacyOutcome::not_conjugate(Refutation::ForcedMapInconsistent, pa->bounds);

  const std::vector<TranslationVector> candidates = TupleEnumerator(a, *pa).run();
  if (candidates.size() > search_space_size(a.rays(), pa->bounds.N))
    throw std::logic_error("candidate set exceeds the bounded search space");

  // Trying z = z_s^-1 solves a^y = z_s b z_s^-1 with y finitely supported,
  // and coset_reduce returns y z_s.
  constexpr std::size_t kChunk = 64;
  for (std::size_t start = 0; start < candidates.size(); start += kChunk) {
    std::vector<HoughtonElement> reps;
    for (std::size_t k = start; k < std::min(candidates.size(), start + kChunk); ++k)
      reps.push_back(inverse(construct_translation_element(a.rays(), candidates[k])));
    auto out = coset_reduce(fsym_conjugate, reps, a, b, options.jobs);
    if (out.is_conjugate())
      return out.with_bounds(pa->bounds);
  }
  return ConjugacyOutcome::not_conjugate(Refutation::ExhaustedBoundedSearch, pa->bounds);
}

namespace {

Offset gcd_all(const std::vector<Offset> &moduli) {
  Offset g = 0;
  for (Offset m : moduli)
    g = std::gcd(g, m);
  return g;
}

// Smallest-mass w with w_k = r_k (mod m_k) and sum w = 0, or nullopt.
std::optional<TranslationVector> realize(const std::vector<Offset> &residues,
                                         const std::vector<Offset> &moduli) {
  const std::size_t n = residues.size();
  const Offset target = -std::accumulate(residues.begin(), residues.end(), Offset{0});
  if (target % gcd_all(moduli) != 0)
    return std::nullopt;
  for (std::size_t k = 0; k < n; ++k)
    if (moduli[k] == 1) {
      TranslationVector w = residues;
      w[k] += target;
      return w;
    }

  // Every ray is moving: search multipliers k_0..k_{n-2} in a window that
  // covers a full period of the last modulus, solve for the last one.
  const Offset span = moduli.back();
  std::optional<TranslationVector> best;
  Offset best_mass = 0;
  std::vector<Offset> mult(n, 0);
  std::function<void(std::size_t, Offset)> rec = [&](std::size_t k, Offset acc) {
    if (k + 1 == n) {
      const Offset rem = target - acc;
      if (rem % moduli[k] != 0)
        return;
      mult[k] = rem / moduli[k];
      TranslationVector w(n);
      Offset mass = 0;
      for (std::size_t q = 0; q < n; ++q) {
        w[q] = residues[q] + mult[q] * moduli[q];
        mass += std::abs(w[q]);
      }
      if (!best || mass < best_mass) {
        best = w;
        best_mass = mass;
      }
      return;
    }
    for (Offset v = -span; v <= span; ++v) {
      mult[k] = v;
      rec(k + 1, acc + v * moduli[k]);
    }
  };
  rec(0, 0);
  return best;
}

} // namespace

std::vector<std::pair<std::vector<Offset>, TranslationVector>>
realizable_residue_classes(const HoughtonElement &a) {
  const int n = a.rays();
  std::vector<int> moving;
  std::vector<Offset> moduli;
  for (int i = 1; i <= n; ++i) {
    const Offset m = std::abs(a.translation(i));
    moduli.push_back(m == 0 ? 1 : m);
    if (m != 0)
      moving.push_back(i);
  }

  std::vector<std::pair<std::vector<Offset>, TranslationVector>> out;
  std::vector<Offset> r(moving.size(), 0);
  for (;;) {
    std::vector<Offset> full(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < moving.size(); ++k)
      full[static_cast<std::size_t>(moving[k] - 1)] = r[k];
    if (auto w = realize(full, moduli))
      out.push_back({r, std::move(*w)});

    // Lexicographic increment, last coordinate fastest.
    std::size_t k = moving.size();
    while (k > 0) {
      --k;
      if (++r[k] < moduli[static_cast<std::size_t>(moving[k] - 1)])
        break;
      r[k] = 0;
      if (k == 0)
        return out;
    }
    if (moving.empty())
      return out;
  }
}

ConjugacyOutcome conjugate(const HoughtonElement &a, const HoughtonElement &b,
                           const SolverOptions &options) {
  check_same_rays(a, b);
  if (a.translation() != b.translation())
    return ConjugacyOutcome::not_conjugate(Refutation::TranslationMismatch);
  if (cycle_type(a) != cycle_type(b))
    return ConjugacyOutcome::not_conjugate(Refutation::CycleTypeMismatch);

  std::vector<HoughtonElement> reps;
  for (const auto &[r, w] : realizable_residue_classes(a))
    reps.push_back(inverse(construct_translation_element(a.rays(), w)));

  const Solver solver = [&](const HoughtonElement &x, const HoughtonElement &y) {
    return conjugate_mod_zero(x, y, options);
  };
  return coset_reduce(solver, reps, a, b, 1);
}

} // namespace houghton
