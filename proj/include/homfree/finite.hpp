#pragma once

// Finite Hom-magmas (S, mu, alpha) given by a Cayley table and a unary map,
// with exhaustive law checkers.
//
// Each checker returns the lexicographically first violating tuple, or
// std::nullopt when the law holds on the whole domain. The kernels exist in a
// serial reference form and an OpenMP form; the public entry points pick one
// by size and must agree with the serial reference.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homfree {

using Element = std::uint32_t;
using Pair = std::array<Element, 2>;
using Triple = std::array<Element, 3>;

/// Non-owning view of a table: mul is row-major n*n, alpha has n entries.
struct MagmaView {
  std::size_t order = 0;
  std::span<const Element> mul;
  std::span<const Element> alpha;

  Element operator()(Element a, Element b) const { return mul[a * order + b]; }
};

class FiniteHomMagma {
 public:
  /// Throws PreconditionError on out-of-range entries, duplicate or empty
  /// labels, or mismatched sizes.
  FiniteHomMagma(std::vector<std::string> labels, std::vector<Element> mul, std::vector<Element> alpha);

  /// Labels default to "a", "b", ... (then "e26", "e27", ... past 26).
  static FiniteHomMagma with_default_labels(std::size_t order, std::vector<Element> mul,
                                            std::vector<Element> alpha);

  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }
  std::optional<Element> find(std::string_view label) const;

  Element mul(Element a, Element b) const { return mul_[a * order() + b]; }
  Element alpha(Element a) const { return alpha_[a]; }
  const std::vector<Element>& mul_table() const noexcept { return mul_; }
  const std::vector<Element>& alpha_map() const noexcept { return alpha_; }

  MagmaView view() const noexcept { return {order(), mul_, alpha_}; }

  friend bool operator==(const FiniteHomMagma&, const FiniteHomMagma&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Element> mul_;
  std::vector<Element> alpha_;
};

std::string default_label(std::size_t index);

namespace serial {
std::optional<Triple> hom_associative_violation(MagmaView m);
std::optional<Triple> associative_violation(MagmaView m);
std::optional<Pair> multiplicative_violation(MagmaView m);
std::optional<Element> involutive_violation(MagmaView m);
}  // namespace serial

// Partition the outermost index across threads; the reported witness is the
// minimum over per-thread first witnesses.
namespace parallel {
std::optional<Triple> hom_associative_violation(MagmaView m);
std::optional<Triple> associative_violation(MagmaView m);
std::optional<Pair> multiplicative_violation(MagmaView m);
std::optional<Element> involutive_violation(MagmaView m);
}  // namespace parallel

/// alpha(a)(bc) = (ab)alpha(c) for all a, b, c.
std::optional<Triple> check_hom_associative(const FiniteHomMagma& m);
/// (ab)c = a(bc) for all a, b, c.
std::optional<Triple> check_associative(const FiniteHomMagma& m);
/// alpha(ab) = alpha(a)alpha(b) for all a, b.
std::optional<Pair> check_multiplicative(const FiniteHomMagma& m);
/// alpha(alpha(a)) = a for all a.
std::optional<Element> check_involutive_alpha(const FiniteHomMagma& m);

/// Outcome of all four checks. A failed law carries its witness as element
/// labels; a law that holds carries none.
struct LawReport {
  std::optional<std::vector<std::string>> hom_associative_witness;
  std::optional<std::vector<std::string>> associative_witness;
  std::optional<std::vector<std::string>> multiplicative_witness;
  std::optional<std::vector<std::string>> involutive_alpha_witness;

  bool hom_associative() const noexcept { return !hom_associative_witness; }
  bool associative() const noexcept { return !associative_witness; }
  bool multiplicative() const noexcept { return !multiplicative_witness; }
  bool involutive_alpha() const noexcept { return !involutive_alpha_witness; }

  /// Involutive Hom-semigroup: Hom-associative, multiplicative, alpha^2 = id.
  bool involutive_hom_semigroup() const noexcept {
    return hom_associative() && multiplicative() && involutive_alpha();
  }

  friend bool operator==(const LawReport&, const LawReport&) = default;
};

LawReport classify(const FiniteHomMagma& m);

/// Aligned one-line-per-law text, e.g. "associative       false  (x,y,x)".
std::string format_report(const LawReport& r);

/// The absorbing element, if the order is at least 2 and one exists.
std::optional<Element> has_zero(const FiniteHomMagma& m);

/// S^0 with the constant unary map onto the zero. Throws PreconditionError
/// naming a witness triple when the multiplication is not associative.
FiniteHomMagma adjoin_zero(const FiniteHomMagma& m);

/// The image of `m` under the relabeling a -> perm[a] (labels move with it).
FiniteHomMagma relabel(const FiniteHomMagma& m, std::span<const Element> perm);

/// The two Cayley-table examples with labels x, y, z:
///   "hom_not_sg"  Hom-semigroup whose product is not associative, alpha = const z
///   "involutive"  involutive Hom-semigroup, alpha swaps x and y
FiniteHomMagma fixture(std::string_view name);

// Structure files: {"labels": [...], "mul": [[...], ...], "alpha": [...]},
// entries given by label.
FiniteHomMagma magma_from_json(std::string_view text);
FiniteHomMagma load_magma(const std::string& path);
std::string magma_to_json(const FiniteHomMagma& m, int indent = -1);

}  // namespace homfree
