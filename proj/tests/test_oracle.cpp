#include <doctest.h>

#include "houghton/conjugacy.hpp"
#include "houghton/serialize.hpp"
#include "support.hpp"

using namespace houghton;
using houghton::test::g;

TEST_CASE("brute force conjugator") {
  const auto a = HoughtonElement::from_cycles(3, {{{1, 0}, {2, 0}}});
  const auto self = oracle::brute_force_conjugator(a, a);
  REQUIRE(self.has_value());
  CHECK(self->empty());

  const auto b = conjugate_element(a, g(3, 2));
  const auto w = oracle::brute_force_conjugator(a, b);
  REQUIRE(w.has_value());
  CHECK(w->str() == "g2");

  const auto extra = compose(g(3, 2), HoughtonElement::from_cycles(3, {{{3, 0}, {3, 1}}}));
  CHECK_FALSE(oracle::brute_force_conjugator(g(3, 2), extra, {8, 1'000'000}).has_value());

  // A tiny candidate cap stops the search early.
  const auto far = conjugate_element(a, evaluate(Word::parse(3, "g2 g3 g2")));
  CHECK_FALSE(oracle::brute_force_conjugator(a, far, {8, 3}).has_value());
}

TEST_CASE("simulate_word") {
  const auto sim = oracle::simulate_word(Word::parse(3, "g2"), 3);
  CHECK(sim.size() == 12);
  for (const auto &[p, q] : sim)
    CHECK(apply(g(3, 2), p) == q);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Word u = oracle::random_word(3, seed, 5), v = oracle::random_word(3, seed + 1, 4);
    const auto su = oracle::simulate_word(u, 20), sv = oracle::simulate_word(v, 40);
    for (const auto &[p, q] : oracle::simulate_word(u * v, 10))
      CHECK(sv.at(su.at(p)) == q);
  }
}

TEST_CASE("random profiles") {
  CHECK(oracle::kProfileVersion == 1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (const char *profile : {"fsym", "mixed", "word-8"})
      CHECK(oracle::random_element(3, seed, profile) == oracle::random_element(3, seed, profile));
    CHECK(oracle::random_word(4, seed, 9) == oracle::random_word(4, seed, 9));
    const auto f = oracle::random_element(2 + static_cast<int>(seed % 3), seed, "fsym");
    for (Offset t : f.translation())
      CHECK(t == 0);
  }
  CHECK_THROWS_AS(oracle::random_element(3, 1, "nope"), std::invalid_argument);
  CHECK_THROWS_AS(oracle::random_element(3, 1, "word-x"), std::invalid_argument);

  // Pinned values; a change here means the profiles changed and the version must move.
  CHECK(oracle::random_word(3, 42, 6).str() == "g3 g2 g3 g3 g2' g2");
  CHECK(serialize(oracle::random_element(2, 7, "fsym")) ==
        "{\"n\":2,\"t\":[0,0],\"exceptions\":[[[1,2],[1,4]],[[1,4],[2,4]],[[2,0],[1,2]],"
        "[[2,4],[2,0]]]}\n");
}

TEST_CASE("word profile respects word-length bounds") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto x = oracle::random_element(3, seed, "word-8");
    for (Offset t : x.translation())
      CHECK(std::abs(t) <= 8);
    for (const auto &[p, q] : x.exceptions())
      CHECK(p.offset <= 8);
  }
}
