#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "houghton/element.hpp"
#include "houghton/word.hpp"

namespace houghton::oracle {

struct SearchBudget {
  std::size_t max_word_length = 8;
  std::size_t max_candidates = 1'000'000;
};

/// Shortest-first search over freely reduced words for w with
/// evaluate(w)^-1 a evaluate(w) = b. Not finding one proves nothing.
std::optional<Word> brute_force_conjugator(const HoughtonElement &a, const HoughtonElement &b,
                                           const SearchBudget &budget = {});

/// Action of w on {(i, m) : m <= window}, applying one letter at a time to
/// every point. Independent of evaluate().
std::map<Point, Point> simulate_word(const Word &w, Offset window);

/// Version of the random profiles below; bump when their output changes.
inline constexpr int kProfileVersion = 1;

/// Deterministic from seed (mt19937_64 with modulo reduction).
Word random_word(int n, std::uint64_t seed, std::size_t length);

/// Profiles:
///   "fsym"     finitely supported permutation of a few points below offset 6
///   "word-<L>" evaluate(random_word(n, seed, L))
///   "mixed"    random translation element times an "fsym" element
HoughtonElement random_element(int n, std::uint64_t seed, std::string_view profile);

} // namespace houghton::oracle
