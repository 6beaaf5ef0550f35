#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

class InvalidWord : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Letter {
  int generator = 2; ///< 2..n for g_i, kSwap for s
  int sign = 1;      ///< +1 or -1; always +1 for s

  friend bool operator==(const Letter &, const Letter &) = default;
};

/// A word over S^{+-1}. Tokens: "g2".."g<n>", suffix "'" for inverses,
/// and "s" (self-inverse) when n = 2.
class Word {
public:
  explicit Word(int n, std::vector<Letter> letters = {});

  static Word parse(int n, std::string_view text);

  int rays() const noexcept { return n_; }
  const std::vector<Letter> &letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word &other) const;

  std::string str() const;

  friend bool operator==(const Word &, const Word &) = default;

private:
  int n_;
  std::vector<Letter> letters_;
};

/// All letters of S^{+-1} for H_n, in a fixed order.
std::vector<Letter> alphabet(int n);

Letter inverse(Letter l);
std::string to_string(Letter l);

/// The element a word represents, in normal form. Runs in time linear in
/// the word length.
HoughtonElement evaluate(const Word &w);

HoughtonElement generator_element(int n, Letter l);

} // namespace houghton
