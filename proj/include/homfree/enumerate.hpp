#pragma once

// Exhaustive census of all (table, unary map) pairs on {0, ..., n-1}.
//
// Candidate index = table_index * n^n + alpha_index, each a base-n integer
// with the first entry (row-major for the table) most significant. Counting
// is by law combination; isomorphism classes are counted by their minimal
// index over all relabelings.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "homfree/finite.hpp"

namespace homfree {

enum LawBit : unsigned {
  kHomAssociative = 1U << 0,
  kAssociative = 1U << 1,
  kMultiplicative = 1U << 2,
  kInvolutiveAlpha = 1U << 3,
};
using LawMask = unsigned;
constexpr LawMask kInvolutiveHomSemigroup = kHomAssociative | kMultiplicative | kInvolutiveAlpha;

LawMask law_mask(const LawReport& r);
LawMask law_mask(MagmaView m);

constexpr std::size_t kMaxEnumerationOrder = 3;

struct Census {
  std::size_t order = 0;
  std::uint64_t total_candidates = 0;
  std::array<std::uint64_t, 16> counts{};  // indexed by LawMask
  bool up_to_iso = false;
  std::array<std::uint64_t, 16> iso_counts{};
  LawMask required = 0;
  std::uint64_t matched = 0;
  std::uint64_t matched_iso = 0;

  friend bool operator==(const Census&, const Census&) = default;
};

struct EnumerateOptions {
  std::size_t order = 1;
  LawMask required = 0;  // a candidate matches when it has every required law
  bool up_to_iso = false;
  std::size_t limit = 0;  // matching structures to return, in index order
};

struct EnumerationResult {
  Census census;
  std::vector<std::uint64_t> indices;
  std::vector<FiniteHomMagma> structures;
};

/// Throws PreconditionError unless 1 <= order <= kMaxEnumerationOrder.
EnumerationResult enumerate(const EnumerateOptions& opts);

namespace serial {
EnumerationResult enumerate(const EnumerateOptions& opts);
}
namespace parallel {
EnumerationResult enumerate(const EnumerateOptions& opts);
}

std::uint64_t candidate_count(std::size_t order);
FiniteHomMagma decode_candidate(std::size_t order, std::uint64_t index);
std::uint64_t encode_candidate(const FiniteHomMagma& m);
/// Minimal index over all relabelings of the candidate.
std::uint64_t canonical_index(std::size_t order, std::uint64_t index);

std::string format_census(const Census& c);

}  // namespace homfree
