#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/orbits.hpp"

namespace houghton {

enum class Refutation {
  TranslationMismatch,
  SupportCountMismatch,
  CycleTypeMismatch,
  ForcedMapInconsistent,
  ExhaustedBoundedSearch,
};

std::string_view to_string(Refutation r);
std::optional<Refutation> refutation_from_string(std::string_view tag);

/// Search bounds for conjugators whose translation is 0 modulo |t_i(a)| on I.
struct BoundData {
  /// max |l_i + l_j| over matched orbit pairs, where t_k(x) = l_k |t_k(a)|.
  Offset K = 0;
  /// max |t_i(a)| over i in I.
  Offset M = 0;
  /// Every instance solvable in this class has a conjugator with sum |t_i(x)| < N.
  Offset N = 1;

  friend bool operator==(const BoundData &, const BoundData &) = default;
};

/// Component-wise maximum.
BoundData merge(const BoundData &x, const BoundData &y);

class ConjugacyOutcome {
public:
  static ConjugacyOutcome conjugate(HoughtonElement x, bool verified,
                                    std::optional<BoundData> bounds = std::nullopt);
  static ConjugacyOutcome not_conjugate(Refutation reason,
                                        std::optional<BoundData> bounds = std::nullopt);

  bool is_conjugate() const noexcept { return conjugator_.has_value(); }
  explicit operator bool() const noexcept { return is_conjugate(); }

  const HoughtonElement &conjugator() const { return conjugator_.value(); }
  bool verified() const noexcept { return verified_; }
  Refutation reason() const { return reason_.value(); }
  const std::optional<BoundData> &bounds() const noexcept { return bounds_; }

  ConjugacyOutcome with_bounds(std::optional<BoundData> b) const;

private:
  ConjugacyOutcome() = default;

  std::optional<HoughtonElement> conjugator_;
  bool verified_ = false;
  std::optional<Refutation> reason_;
  std::optional<BoundData> bounds_;
};

/// Canonical outcome document with fields decision, certificate, reason, bounds.
std::string serialize(const ConjugacyOutcome &outcome);

struct SolverOptions {
  /// Worker threads used for candidate evaluation. Results do not depend on it.
  unsigned jobs = 1;
};

using Solver = std::function<ConjugacyOutcome(const HoughtonElement &, const HoughtonElement &)>;

/// true iff x^-1 a x == b.
bool verify(const HoughtonElement &a, const HoughtonElement &b, const HoughtonElement &x);

/// Decides whether some finitely supported x has x^-1 a x = b and builds one.
ConjugacyOutcome fsym_conjugate(const HoughtonElement &a, const HoughtonElement &b);

/// Runs `solver` on (a, z^-1 b z) for each rep z in order and returns
/// the first success, with conjugator x z^-1. Candidates are evaluated on
/// `jobs` threads; the earliest successful rep always wins.
ConjugacyOutcome coset_reduce(const Solver &solver, std::span<const HoughtonElement> reps,
                              const HoughtonElement &a, const HoughtonElement &b,
                              unsigned jobs = 1);

/// Product of the infinite cycles of g whose ends lie in `ends_class`.
/// Throws std::invalid_argument unless ends_class is a class of ~_g.
HoughtonElement centralizer_element(const HoughtonElement &g, const std::vector<int> &ends_class);

/// An element with translation w whose support avoids `forbidden`, made of
/// two-ray shifts above every forbidden offset.
HoughtonElement construct_translation_element(int n, const TranslationVector &w,
                                              std::span<const Point> forbidden = {});

/// Thrown by compute_bounds when the infinite orbits of a and b cannot be
/// matched by their end residues.
class StructuralMismatch : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

BoundData compute_bounds(const HoughtonElement &a, const HoughtonElement &b);

/// Number of integer n-tuples with sum |s_i| < N and sum s_i = 0; an upper
/// bound on the translation vectors conjugate_mod_zero may try.
std::uint64_t search_space_size(int n, Offset N);

/// The translation vectors conjugate_mod_zero tries for (a, b), in order.
std::vector<TranslationVector> mod_zero_candidates(const HoughtonElement &a,
                                                   const HoughtonElement &b);

/// Decides conjugacy by some x with t_i(x) = 0 mod |t_i(a)| for i in I.
ConjugacyOutcome conjugate_mod_zero(const HoughtonElement &a, const HoughtonElement &b,
                                    const SolverOptions &options = {});

/// Residue tuples r (0 <= r_i < |t_i(a)|, i in I) that some zero-sum
/// translation vector realizes, each paired with such a vector.
std::vector<std::pair<std::vector<Offset>, TranslationVector>>
realizable_residue_classes(const HoughtonElement &a);

/// Full decision procedure: returns a verified conjugator x with
/// x^-1 a x = b, or the reason none exists.
ConjugacyOutcome conjugate(const HoughtonElement &a, const HoughtonElement &b,
                           const SolverOptions &options = {});

} // namespace houghton
