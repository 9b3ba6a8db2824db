#pragma once

// The universal property of H(X): a map f from generators into an involutive
// Hom-semigroup (S, ., beta) extends uniquely to a morphism fbar with
//
//   fbar(<x>^(k))       = beta^k(f(x))
//   fbar(<x>^(k) rest)  = fbar(<x>^(k)) . fbar(rest)

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homfree/finite.hpp"
#include "homfree/terms.hpp"

namespace homfree {

class GeneratorAssignment {
 public:
  /// Validates every index and that `target` is an involutive Hom-semigroup;
  /// throws PreconditionError otherwise. The law report is kept.
  GeneratorAssignment(FiniteHomMagma target, std::map<GeneratorId, Element> map);

  /// Builds the map from "gen" -> element label pairs.
  static GeneratorAssignment from_labels(FiniteHomMagma target,
                                         const std::vector<std::pair<std::string, std::string>>& pairs);

  const FiniteHomMagma& target() const noexcept { return target_; }
  const std::map<GeneratorId, Element>& map() const noexcept { return map_; }
  const LawReport& target_report() const noexcept { return report_; }

  /// Throws MissingAssignmentError for an unmapped generator.
  Element at(const GeneratorId& g) const;

  /// Mapped generators in increasing name order.
  std::vector<GeneratorId> alphabet() const;

 private:
  FiniteHomMagma target_;
  std::map<GeneratorId, Element> map_;
  LawReport report_;
};

/// fbar(w), a right-associated fold of |w|-1 target products.
Element extend(const GeneratorAssignment& assign, const Word& w);

using Extender = std::function<Element(const GeneratorAssignment&, const Word&)>;

struct MorphismViolation {
  enum class Law { Product, Alpha };
  Law law;
  std::uint64_t sample;
  Word u;
  Word v;
};

/// Checks fbar(u <> v) = fbar(u) fbar(v) and fbar(alpha u) = beta(fbar u) on
/// `samples` random pairs drawn from SplitMix64::stream(seed, i). Reports the
/// violation with the smallest sample index. `ext` replaces `extend` when set.
std::optional<MorphismViolation> verify_morphism(const GeneratorAssignment& assign, std::size_t max_len,
                                                 std::uint64_t samples, std::uint64_t seed,
                                                 const Extender& ext = {});

namespace serial {
std::optional<MorphismViolation> verify_morphism(const GeneratorAssignment& assign, std::size_t max_len,
                                                 std::uint64_t samples, std::uint64_t seed,
                                                 const Extender& ext = {});
}

/// A word whose split recomputations disagree with fbar.
struct UniquenessViolation {
  Word word;
  std::size_t split;
};

/// For every word w of length <= max_len and every split w = w1 w2, checks
///   fbar(w) = fbar(u) . beta^{|w1|-1}(fbar(w2)),
/// where u is w1 with all but its last bit flipped, so u <> a^{|w1|-1}(w2) = w.
/// Exhaustive, so keep the alphabet at most 3 and max_len at most 5.
std::optional<UniquenessViolation> verify_uniqueness(const GeneratorAssignment& assign, std::size_t max_len);

}  // namespace homfree
