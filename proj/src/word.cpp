#include "houghton/word.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "element_builder.hpp"

namespace houghton {

namespace {

void check_letter(int n, Letter l) {
  if (l.generator == kSwap) {
    if (n != 2)
      throw InvalidWord("token s is only valid for n = 2");
    return;
  }
  if (l.generator < 2 || l.generator > n)
    throw InvalidWord("generator g" + std::to_string(l.generator) + " is not valid for n = " +
                      std::to_string(n));
  if (l.sign != 1 && l.sign != -1)
    throw InvalidWord("letter sign must be +1 or -1");
}

} // namespace

Word::Word(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 2)
    throw InvalidWord("number of rays must be at least 2, got " + std::to_string(n));
  for (auto &l : letters_) {
    check_letter(n_, l);
    if (l.generator == kSwap)
      l.sign = 1;
  }
}

Word Word::parse(int n, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    int sign = 1;
    if (token.ends_with('\'')) {
      sign = -1;
      token.remove_suffix(1);
    }
    if (token == "s") {
      letters.push_back({kSwap, 1});
      continue;
    }
    if (token.size() < 2 || token[0] != 'g' ||
        !std::all_of(token.begin() + 1, token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        token.size() > 10)
      throw InvalidWord("malformed token '" + std::string(token) + "'");
    letters.push_back({std::stoi(std::string(token.substr(1))), sign});
  }
  return Word(n, std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto &l : out)
    l = houghton::inverse(l);
  return Word(n_, std::move(out));
}

Word Word::operator*(const Word &other) const {
  if (other.n_ != n_)
    throw InvalidWord("cannot concatenate words over different ray counts");
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(n_, std::move(out));
}

std::string Word::str() const {
  std::string out;
  for (const auto &l : letters_) {
    if (!out.empty())
      out += ' ';
    out += to_string(l);
  }
  return out;
}

std::vector<Letter> alphabet(int n) {
  std::vector<Letter> out;
  for (int i = 2; i <= n; ++i) {
    out.push_back({i, 1});
    out.push_back({i, -1});
  }
  if (n == 2)
    out.push_back({kSwap, 1});
  return out;
}

Letter inverse(Letter l) {
  if (l.generator == kSwap)
    return l;
  return {l.generator, -l.sign};
}

std::string to_string(Letter l) {
  if (l.generator == kSwap)
    return "s";
  return "g" + std::to_string(l.generator) + (l.sign < 0 ? "'" : "");
}

HoughtonElement generator_element(int n, Letter l) {
  HoughtonElement g = HoughtonElement::generator(n, l.generator);
  return l.sign < 0 ? inverse(g) : g;
}

namespace {

// Each ray is a sequence of slots. slots[i] holds the original points that
// currently sit at offsets 0..size-1 of ray i; every slot m >= size holds the
// original point (i, m - shift[i]). A letter moves slot contents, so the
// whole word costs O(|w|).
struct SlotState {
  std::vector<std::deque<Point>> slots;
  std::vector<Offset> shift;

  explicit SlotState(int n)
      : slots(static_cast<std::size_t>(n)), shift(static_cast<std::size_t>(n), 0) {}

  std::deque<Point> &ray(int i) { return slots[static_cast<std::size_t>(i - 1)]; }

  void materialize_front(int i) {
    auto &d = ray(i);
    if (d.empty())
      d.push_back({i, -shift[static_cast<std::size_t>(i - 1)]});
  }

  // Content of (from, 0) moves to (to, 0); ray `from` moves towards the
  // origin and ray `to` away from it.
  void transfer(int from, int to) {
    materialize_front(from);
    Point p = ray(from).front();
    ray(from).pop_front();
    ray(to).push_front(p);
    --shift[static_cast<std::size_t>(from - 1)];
    ++shift[static_cast<std::size_t>(to - 1)];
  }

  void swap_origins() {
    materialize_front(1);
    materialize_front(2);
    std::swap(ray(1).front(), ray(2).front());
  }
};

} // namespace

HoughtonElement evaluate(const Word &w) {
  const int n = w.rays();
  SlotState state(n);
  for (const Letter &l : w.letters()) {
    if (l.generator == kSwap)
      state.swap_origins();
    else if (l.sign > 0)
      state.transfer(l.generator, 1);
    else
      state.transfer(1, l.generator);
  }

  std::vector<Exception> table;
  for (int i = 1; i <= n; ++i) {
    const auto &d = state.ray(i);
    for (std::size_t m = 0; m < d.size(); ++m)
      table.push_back({d[m], {i, static_cast<Offset>(m)}});
  }
  return ElementBuilder::unchecked(n, std::move(state.shift), std::move(table));
}

} // namespace houghton
