#include "houghton/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "houghton/conjugacy.hpp"

namespace houghton::oracle {

namespace {

// Action of one letter on one point, written out from the generator
// definitions rather than through HoughtonElement.
Point letter_action(Letter l, Point p) {
  if (l.generator == kSwap) {
    if (p == Point{1, 0})
      return {2, 0};
    if (p == Point{2, 0})
      return {1, 0};
    return p;
  }
  const int i = l.generator;
  if (l.sign > 0) {
    if (p.ray == 1)
      return {1, p.offset + 1};
    if (p.ray == i)
      return p.offset == 0 ? Point{1, 0} : Point{i, p.offset - 1};
    return p;
  }
  if (p.ray == i)
    return {i, p.offset + 1};
  if (p.ray == 1)
    return p.offset == 0 ? Point{i, 0} : Point{1, p.offset - 1};
  return p;
}

std::uint64_t draw(std::mt19937_64 &rng, std::uint64_t bound) { return rng() % bound; }

} // namespace

std::map<Point, Point> simulate_word(const Word &w, Offset window) {
  std::map<Point, Point> out;
  for (int i = 1; i <= w.rays(); ++i)
    for (Offset m = 0; m <= window; ++m) {
      Point p{i, m};
      for (const Letter &l : w.letters())
        p = letter_action(l, p);
      out[{i, m}] = p;
    }
  return out;
}

std::optional<Word> brute_force_conjugator(const HoughtonElement &a, const HoughtonElement &b,
                                           const SearchBudget &budget) {
  check_same_rays(a, b);
  const int n = a.rays();
  const auto letters = alphabet(n);
  std::size_t tried = 0;

  std::vector<Letter> word;
  std::vector<HoughtonElement> prefix{HoughtonElement::identity(n)};
  std::optional<Word> found;

  // Depth-first over reduced words of exactly `length` letters.
  auto search = [&](auto &&self, std::size_t length) -> bool {
    if (word.size() == length) {
      if (++tried > budget.max_candidates)
        return true;
      if (verify(a, b, prefix.back())) {
        found = Word(n, word);
        return true;
      }
      return false;
    }
    for (const Letter &l : letters) {
      if (!word.empty() && word.back() == inverse(l))
        continue;
      word.push_back(l);
      prefix.push_back(compose(prefix.back(), generator_element(n, l)));
      const bool stop = self(self, length);
      word.pop_back();
      prefix.pop_back();
      if (stop)
        return true;
    }
    return false;
  };

  for (std::size_t length = 0; length <= budget.max_word_length; ++length)
    if (search(search, length))
      break;
  return found;
}

Word random_word(int n, std::uint64_t seed, std::size_t length) {
  std::mt19937_64 rng(seed);
  const auto letters = alphabet(n);
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k)
    out.push_back(letters[draw(rng, letters.size())]);
  return Word(n, std::move(out));
}

namespace {

HoughtonElement random_fsym(int n, std::mt19937_64 &rng) {
  constexpr Offset kWindow = 6;
  std::vector<Point> pool;
  for (int i = 1; i <= n; ++i)
    for (Offset m = 0; m < kWindow; ++m)
      pool.push_back({i, m});
  // Fisher-Yates with our own draw so output is stable across standard libraries.
  for (std::size_t k = pool.size(); k > 1; --k)
    std::swap(pool[k - 1], pool[draw(rng, k)]);
  const std::size_t moved = 2 + draw(rng, 7);
  std::vector<Point> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(moved));
  std::vector<Point> images = chosen;
  for (std::size_t k = images.size(); k > 1; --k)
    std::swap(images[k - 1], images[draw(rng, k)]);
  std::vector<Exception> table;
  for (std::size_t k = 0; k < chosen.size(); ++k)
    table.push_back({chosen[k], images[k]});
  return HoughtonElement::from_table(n, TranslationVector(static_cast<std::size_t>(n), 0),
                                     std::move(table));
}

} // namespace

HoughtonElement random_element(int n, std::uint64_t seed, std::string_view profile) {
  check_rays(n);
  std::mt19937_64 rng(seed);
  if (profile == "fsym")
    return random_fsym(n, rng);
  if (profile.starts_with("word-")) {
    std::size_t length = 0;
    const auto digits = profile.substr(5);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), length);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw std::invalid_argument("bad word profile '" + std::string(profile) + "'");
    return evaluate(random_word(n, rng(), length));
  }
  if (profile == "mixed") {
    TranslationVector w(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n - 1; ++k) {
      const Offset v = static_cast<Offset>(draw(rng, 7)) - 3;
      w[static_cast<std::size_t>(k)] = v;
      w.back() -= v;
    }
    const Offset h = static_cast<Offset>(draw(rng, 4));
    std::vector<Point> below;
    if (h > 0)
      below.push_back({1, h - 1});
    return compose(construct_translation_element(n, w, below), random_fsym(n, rng));
  }
  throw std::invalid_argument("unknown random profile '" + std::string(profile) + "'");
}

} // namespace houghton::oracle
