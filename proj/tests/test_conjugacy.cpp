#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "houghton/conjugacy.hpp"
#include "houghton/serialize.hpp"
#include "support.hpp"

using namespace houghton;
using houghton::test::g;
using houghton::test::word;

namespace {

HoughtonElement cycle(int n, std::vector<Point> points) {
  return HoughtonElement::from_cycles(n, {std::move(points)});
}

// Finite cycle lengths of a t = 0 element, by iterating apply on its table.
std::vector<std::size_t> brute_cycle_lengths(const HoughtonElement &x) {
  std::set<Point> seen;
  std::vector<std::size_t> out;
  for (const auto &[p, q] : x.exceptions()) {
    if (seen.contains(p))
      continue;
    std::size_t len = 0;
    Point r = p;
    do {
      seen.insert(r);
      r = apply(x, r);
      ++len;
    } while (r != p);
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Point> moved(const HoughtonElement &x, Offset window) {
  std::set<Point> out;
  for (const Point &p : test::window_points(x.rays(), window))
    if (apply(x, p) != p)
      out.insert(p);
  return out;
}

Offset mass(const TranslationVector &t) {
  Offset s = 0;
  for (Offset v : t)
    s += v < 0 ? -v : v;
  return s;
}

} // namespace

TEST_CASE("refutation tags") {
  for (auto r : {Refutation::TranslationMismatch, Refutation::SupportCountMismatch,
                 Refutation::CycleTypeMismatch, Refutation::ForcedMapInconsistent,
                 Refutation::ExhaustedBoundedSearch})
    CHECK(refutation_from_string(to_string(r)) == r);
  CHECK(to_string(Refutation::CycleTypeMismatch) == "cycle-type-mismatch");
  CHECK_FALSE(refutation_from_string("nope").has_value());
}

TEST_CASE("verify") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = test::random_mixed(3, seed);
    const auto x = test::random_mixed(3, seed + 99);
    CHECK(verify(a, a, HoughtonElement::identity(3)));
    CHECK(verify(a, conjugate_element(a, x), x));
    CHECK_FALSE(verify(g(3, 2), g(3, 3), x));
  }
}

TEST_CASE("fsym_conjugate examples") {
  const auto a = cycle(2, {{1, 0}, {1, 1}});
  const auto b = cycle(2, {{1, 2}, {1, 3}});
  const auto r = fsym_conjugate(a, b);
  REQUIRE(r.is_conjugate());
  CHECK(r.verified());
  CHECK(verify(a, b, r.conjugator()));
  CHECK(r.conjugator().translation() == TranslationVector{0, 0});

  const auto c3 = cycle(2, {{1, 0}, {1, 1}, {2, 0}});
  const auto m = fsym_conjugate(a, c3);
  REQUIRE_FALSE(m.is_conjugate());
  CHECK(m.reason() == Refutation::CycleTypeMismatch);

  const auto same = fsym_conjugate(g(3, 2), g(3, 2));
  REQUIRE(same.is_conjugate());
  CHECK(same.conjugator().is_identity());

  const auto diff = fsym_conjugate(g(3, 2), g(3, 3));
  REQUIRE_FALSE(diff.is_conjugate());
  CHECK(diff.reason() == Refutation::TranslationMismatch);

  // Conjugate by an element of translation (1,0,-1) but not by any finitary one.
  const auto z = construct_translation_element(3, {1, 0, -1});
  const auto fz = fsym_conjugate(g(3, 2), conjugate_element(g(3, 2), z));
  REQUIRE_FALSE(fz.is_conjugate());
}

TEST_CASE("fsym_conjugate agrees with finite cycle type on finitary pairs") {
  std::size_t yes = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto a = oracle::random_element(n, seed, "fsym");
    const auto b = seed % 2 ? conjugate_element(a, oracle::random_element(n, seed + 5, "fsym"))
                            : oracle::random_element(n, seed + 11, "fsym");
    const bool expect = brute_cycle_lengths(a) == brute_cycle_lengths(b);
    const auto r = fsym_conjugate(a, b);
    REQUIRE(r.is_conjugate() == expect);
    if (!expect)
      continue;
    ++yes;
    const auto &x = r.conjugator();
    CHECK(verify(a, b, x));
    CHECK(x.translation() == TranslationVector(static_cast<std::size_t>(n), 0));
    const auto sa = moved(a, 8), sb = moved(b, 8);
    std::size_t shared = 0;
    for (const Point &p : sa)
      shared += sb.contains(p) ? 1 : 0;
    CHECK(sa.size() - shared == sb.size() - shared);
  }
  CHECK(yes >= 150);
}

TEST_CASE("fsym_conjugate on elements with infinite orbits") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto a = test::random_mixed(n, seed);
    const auto y = oracle::random_element(n, seed + 17, "fsym");
    const auto b = conjugate_element(a, y);
    const auto r = fsym_conjugate(a, b);
    REQUIRE(r.is_conjugate());
    CHECK(verify(a, b, r.conjugator()));
    CHECK(mass(r.conjugator().translation()) == 0);
  }
}

TEST_CASE("coset_reduce") {
  const auto a = word(3, "g2 g3'");
  const auto y = oracle::random_element(3, 4, "fsym");
  const auto b = conjugate_element(a, y);
  const std::vector<HoughtonElement> id{HoughtonElement::identity(3)};
  const auto direct = fsym_conjugate(a, b);
  const auto reduced = coset_reduce(fsym_conjugate, id, a, b);
  REQUIRE(reduced.is_conjugate());
  CHECK(reduced.conjugator() == direct.conjugator());

  // Only the second rep brings b2 back to g2.
  const auto z = construct_translation_element(3, {1, 0, -1});
  const auto b2 = conjugate_element(g(3, 2), inverse(z));
  const std::vector<HoughtonElement> reps{HoughtonElement::identity(3), z};
  const auto r = coset_reduce(fsym_conjugate, reps, g(3, 2), b2);
  REQUIRE(r.is_conjugate());
  CHECK(verify(g(3, 2), b2, r.conjugator()));

  const std::vector<HoughtonElement> none{HoughtonElement::identity(3)};
  const auto fail = coset_reduce(fsym_conjugate, none, g(3, 2), b2);
  REQUIRE_FALSE(fail.is_conjugate());
  CHECK(fail.reason() == Refutation::ExhaustedBoundedSearch);

  // Same winner regardless of the number of workers.
  std::vector<HoughtonElement> many;
  for (std::uint64_t s = 0; s < 40; ++s)
    many.push_back(oracle::random_element(3, s, "fsym"));
  many.push_back(z);
  const auto one = coset_reduce(fsym_conjugate, many, g(3, 2), b2, 1);
  const auto four = coset_reduce(fsym_conjugate, many, g(3, 2), b2, 4);
  REQUIRE(one.is_conjugate());
  CHECK(one.conjugator() == four.conjugator());
}

TEST_CASE("centralizer_element") {
  CHECK(centralizer_element(g(3, 2), {1, 2}) == g(3, 2));
  CHECK_THROWS_AS(centralizer_element(g(3, 2), {1}), std::invalid_argument);
  CHECK_THROWS_AS(centralizer_element(g(3, 2), {1, 3}), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto x = test::random_mixed(n, seed, 10);
    for (const auto &cls : ends_partition(x).classes) {
      const auto c = centralizer_element(x, cls);
      CHECK(compose(c, x) == compose(x, c));
      for (int j = 1; j <= n; ++j) {
        const bool in = std::find(cls.begin(), cls.end(), j) != cls.end();
        CHECK(c.translation(j) == (in ? x.translation(j) : 0));
      }
    }
  }
}

TEST_CASE("construct_translation_element") {
  CHECK(construct_translation_element(3, {0, 0, 0}).is_identity());
  const auto s = construct_translation_element(3, {1, -1, 0});
  CHECK(s.translation() == TranslationVector{1, -1, 0});
  std::set<Point> images;
  for (const Point &p : test::window_points(3, 10))
    images.insert(apply(s, p));
  CHECK(images.size() == test::window_points(3, 10).size());
  CHECK_THROWS_AS(construct_translation_element(3, {1, 0, 0}), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = test::random_mixed(4, seed);
    std::vector<Point> forbidden;
    for (const auto &[p, q] : a.exceptions())
      forbidden.push_back(p);
    forbidden.push_back({2, static_cast<Offset>(seed % 7)});
    const TranslationVector w{static_cast<Offset>(seed % 5) - 2, 3, -2,
                              -1 - (static_cast<Offset>(seed % 5) - 2)};
    const auto x = construct_translation_element(4, w, forbidden);
    CHECK(x.translation() == w);
    for (const Point &p : forbidden)
      CHECK(apply(x, p) == p);
  }
}

TEST_CASE("compute_bounds and search space") {
  const auto b2 = compute_bounds(g(3, 2), g(3, 2));
  CHECK(b2.M == 1);
  CHECK(b2.N >= 1);
  const auto bi = compute_bounds(HoughtonElement::identity(3), HoughtonElement::identity(3));
  CHECK(bi == BoundData{0, 0, 1});
  CHECK_THROWS_AS(compute_bounds(word(3, "g2 g2"), conjugate_element(word(3, "g2 g2"), g(3, 3))),
                  StructuralMismatch);
  CHECK(merge({1, 2, 3}, {3, 1, 2}) == BoundData{3, 2, 3});

  // Brute-force count of tuples with mass < N and zero sum.
  for (int n : {2, 3, 4})
    for (Offset N : {1, 2, 3, 5}) {
      std::uint64_t count = 0;
      std::vector<Offset> s(static_cast<std::size_t>(n), -N);
      while (true) {
        Offset sum = 0, m = 0;
        for (Offset v : s) {
          sum += v;
          m += v < 0 ? -v : v;
        }
        count += (sum == 0 && m < N) ? 1 : 0;
        std::size_t k = 0;
        while (k < s.size() && ++s[k] > N)
          s[k++] = -N;
        if (k == s.size())
          break;
      }
      CHECK(search_space_size(n, N) == count);
    }
}

TEST_CASE("mod-zero candidates") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = test::random_mixed(3, seed);
    const auto b = conjugate_element(a, oracle::random_element(3, seed, "fsym"));
    const auto cands = mod_zero_candidates(a, b);
    REQUIRE_FALSE(cands.empty());
    CHECK(mass(cands.front()) == 0);
    const auto bounds = compute_bounds(a, b);
    CHECK(cands.size() <= search_space_size(3, bounds.N));
    for (std::size_t k = 0; k < cands.size(); ++k) {
      Offset sum = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        sum += cands[k][i];
        const Offset ti = a.translation()[i];
        if (ti != 0)
          CHECK(cands[k][i] % ti == 0);
      }
      CHECK(sum == 0);
      CHECK(mass(cands[k]) < bounds.N);
      if (k)
        CHECK(mass(cands[k - 1]) <= mass(cands[k]));
    }
  }
}

TEST_CASE("conjugate_mod_zero") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = test::random_mixed(3, seed);
    const auto self = conjugate_mod_zero(a, a);
    REQUIRE(self.is_conjugate());
    CHECK(self.conjugator().is_identity());
    const auto b = conjugate_element(a, oracle::random_element(3, seed + 1, "fsym"));
    const auto r = conjugate_mod_zero(a, b);
    REQUIRE(r.is_conjugate());
    CHECK(verify(a, b, r.conjugator()));
  }

  // Every conjugator of g2 to this b has nonzero translation.
  const auto z = construct_translation_element(3, {1, 0, -1});
  const auto b = conjugate_element(g(3, 2), z);
  const auto r = conjugate_mod_zero(g(3, 2), b);
  REQUIRE(r.is_conjugate());
  CHECK(verify(g(3, 2), b, r.conjugator()));
  CHECK(mass(r.conjugator().translation()) > 0);
}

TEST_CASE("realizable residue classes") {
  // A free ray makes every class realizable.
  const auto free = realizable_residue_classes(word(3, "g2 g2"));
  CHECK(free.size() == 4);
  // With no free ray the residues of (2,-2) must sum to 0 mod 2.
  const auto tight = realizable_residue_classes(word(2, "g2 g2"));
  CHECK(tight.size() == 2);
  for (const auto *classes : {&free, &tight})
    for (const auto &[r, w] : *classes) {
      Offset sum = 0;
      for (Offset v : w)
        sum += v;
      CHECK(sum == 0);
      std::size_t k = 0;
      for (Offset v : w) {
        if (k < r.size())
          CHECK(((v % 2) + 2) % 2 == r[k]);
        ++k;
      }
    }
  const auto none = realizable_residue_classes(HoughtonElement::identity(3));
  REQUIRE(none.size() == 1);
  CHECK(none[0].first.empty());
}

TEST_CASE("conjugate") {
  const auto tm = conjugate(g(3, 2), g(3, 3));
  REQUIRE_FALSE(tm.is_conjugate());
  CHECK(tm.reason() == Refutation::TranslationMismatch);

  const auto extra = compose(g(3, 2), cycle(3, {{3, 0}, {3, 1}}));
  const auto ct = conjugate(g(3, 2), extra);
  REQUIRE_FALSE(ct.is_conjugate());
  CHECK(ct.reason() == Refutation::CycleTypeMismatch);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const auto a = evaluate(oracle::random_word(n, seed, 1 + seed % 8));
    const auto x = evaluate(oracle::random_word(n, seed + 1000, seed % 11));
    const auto b = conjugate_element(a, x);
    const auto r = conjugate(a, b);
    REQUIRE(r.is_conjugate());
    CHECK(r.verified());
    CHECK(verify(a, b, r.conjugator()));
    const auto back = conjugate(b, a);
    REQUIRE(back.is_conjugate());
    CHECK(verify(b, a, back.conjugator()));
  }
}

TEST_CASE("conjugate decisions agree both ways and across thread counts") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = evaluate(oracle::random_word(3, seed, 3));
    const auto b = evaluate(oracle::random_word(3, seed + 500, 3));
    const auto ab = conjugate(a, b);
    const auto ba = conjugate(b, a);
    CHECK(ab.is_conjugate() == ba.is_conjugate());
    if (ab.is_conjugate()) {
      CHECK(verify(a, b, ab.conjugator()));
      CHECK(a.translation() == b.translation());
      CHECK(cycle_type(a) == cycle_type(b));
    }
    const auto par = conjugate(a, b, {4});
    CHECK(par.is_conjugate() == ab.is_conjugate());
    if (par.is_conjugate())
      CHECK(par.conjugator() == ab.conjugator());
  }
}

TEST_CASE("outcome documents") {
  const auto r = conjugate(g(3, 2), g(3, 2));
  CHECK(serialize(r) ==
        "{\"decision\":\"yes\",\"certificate\":{\"n\":3,\"t\":[0,0,0],\"exceptions\":[]},"
        "\"bounds\":{\"K\":0,\"M\":1,\"N\":1}}\n");
  CHECK(serialize(conjugate(g(3, 2), g(3, 3))) ==
        "{\"decision\":\"no\",\"reason\":\"translation-mismatch\"}\n");
}

TEST_CASE("solver finds every conjugator the word search finds in H_2") {
  // All elements of H_2 given by words of length <= 4, paired up.
  std::map<std::string, HoughtonElement> unique;
  const auto letters = alphabet(2);
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 0; len <= 4; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto &w : frontier) {
      const auto x = evaluate(Word(2, w));
      unique.emplace(serialize(x), x);
      for (const Letter &l : letters) {
        next.push_back(w);
        next.back().push_back(l);
      }
    }
    frontier = std::move(next);
  }
  std::size_t witnessed = 0;
  for (auto i = unique.begin(); i != unique.end(); ++i)
    for (auto j = std::next(i); j != unique.end(); ++j) {
      const auto &a = i->second, &b = j->second;
      if (a.translation() != b.translation())
        continue;
      const auto found = oracle::brute_force_conjugator(a, b, {10, 1'000'000});
      const auto r = conjugate(a, b);
      if (found) {
        ++witnessed;
        CHECK(r.is_conjugate());
      }
      if (r.is_conjugate())
        CHECK(verify(a, b, r.conjugator()));
    }
  CHECK(witnessed > 0);
}
