#include "homfree/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "homfree/error.hpp"

namespace homfree {

namespace {

constexpr std::size_t kMaxCells = kMaxEnumerationOrder * kMaxEnumerationOrder;

struct Candidate {
  std::size_t order;
  std::array<Element, kMaxCells> mul{};
  std::array<Element, kMaxEnumerationOrder> alpha{};

  MagmaView view() const {
    return {order, std::span<const Element>(mul.data(), order * order),
            std::span<const Element>(alpha.data(), order)};
  }
};

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void check_order(std::size_t order) {
  if (order < 1 || order > kMaxEnumerationOrder)
    throw PreconditionError("enumeration order must be between 1 and " + std::to_string(kMaxEnumerationOrder) +
                            ", got " + std::to_string(order));
}

Candidate decode(std::size_t n, std::uint64_t index) {
  Candidate c{n};
  for (std::size_t i = n; i-- > 0;) {
    c.alpha[i] = static_cast<Element>(index % n);
    index /= n;
  }
  for (std::size_t i = n * n; i-- > 0;) {
    c.mul[i] = static_cast<Element>(index % n);
    index /= n;
  }
  return c;
}

std::uint64_t encode(const Candidate& c) {
  const std::size_t n = c.order;
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < n * n; ++i) index = index * n + c.mul[i];
  for (std::size_t i = 0; i < n; ++i) index = index * n + c.alpha[i];
  return index;
}

std::vector<std::array<Element, kMaxEnumerationOrder>> permutations(std::size_t n) {
  std::array<Element, kMaxEnumerationOrder> p{};
  std::iota(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n), Element{0});
  std::vector<std::array<Element, kMaxEnumerationOrder>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)));
  return out;
}

std::uint64_t relabeled_index(const Candidate& c, const std::array<Element, kMaxEnumerationOrder>& p) {
  const std::size_t n = c.order;
  Candidate r{n};
  for (std::size_t a = 0; a < n; ++a) {
    r.alpha[p[a]] = p[c.alpha[a]];
    for (std::size_t b = 0; b < n; ++b) r.mul[p[a] * n + p[b]] = p[c.mul[a * n + b]];
  }
  return encode(r);
}

struct Partial {
  Census census;
  std::vector<std::uint64_t> matches;
};

// Counts candidates in [begin, end) and keeps the first `limit` matches.
void scan_range(std::size_t n, std::uint64_t begin, std::uint64_t end, const EnumerateOptions& opts,
                const std::vector<std::array<Element, kMaxEnumerationOrder>>& perms, Partial& out) {
  for (std::uint64_t index = begin; index < end; ++index) {
    const Candidate c = decode(n, index);
    const LawMask mask = law_mask(c.view());
    ++out.census.counts[mask];
    const bool matches = (mask & opts.required) == opts.required;
    if (matches) ++out.census.matched;

    bool representative = true;
    if (opts.up_to_iso) {
      for (const auto& p : perms) {
        if (relabeled_index(c, p) < index) {
          representative = false;
          break;
        }
      }
      if (representative) {
        ++out.census.iso_counts[mask];
        if (matches) ++out.census.matched_iso;
      }
    }
    if (matches && representative && out.matches.size() < opts.limit) out.matches.push_back(index);
  }
}

EnumerationResult finish(const EnumerateOptions& opts, Census census, std::vector<std::uint64_t> matches) {
  EnumerationResult r;
  r.census = census;
  if (matches.size() > opts.limit) matches.resize(opts.limit);
  for (auto index : matches) r.structures.push_back(decode_candidate(opts.order, index));
  r.indices = std::move(matches);
  return r;
}

Census empty_census(const EnumerateOptions& opts) {
  Census c;
  c.order = opts.order;
  c.total_candidates = candidate_count(opts.order);
  c.up_to_iso = opts.up_to_iso;
  c.required = opts.required;
  return c;
}

void merge_into(Census& into, const Census& from) {
  for (std::size_t m = 0; m < 16; ++m) {
    into.counts[m] += from.counts[m];
    into.iso_counts[m] += from.iso_counts[m];
  }
  into.matched += from.matched;
  into.matched_iso += from.matched_iso;
}

}  // namespace

LawMask law_mask(const LawReport& r) {
  return (r.hom_associative() ? kHomAssociative : 0U) | (r.associative() ? kAssociative : 0U) |
         (r.multiplicative() ? kMultiplicative : 0U) | (r.involutive_alpha() ? kInvolutiveAlpha : 0U);
}

LawMask law_mask(MagmaView m) {
  return (serial::hom_associative_violation(m) ? 0U : kHomAssociative) |
         (serial::associative_violation(m) ? 0U : kAssociative) |
         (serial::multiplicative_violation(m) ? 0U : kMultiplicative) |
         (serial::involutive_violation(m) ? 0U : kInvolutiveAlpha);
}

std::uint64_t candidate_count(std::size_t order) { return ipow(order, order * order) * ipow(order, order); }

FiniteHomMagma decode_candidate(std::size_t order, std::uint64_t index) {
  check_order(order);
  if (index >= candidate_count(order)) throw PreconditionError("candidate index out of range");
  const Candidate c = decode(order, index);
  return FiniteHomMagma::with_default_labels(order, {c.mul.begin(), c.mul.begin() + order * order},
                                             {c.alpha.begin(), c.alpha.begin() + order});
}

std::uint64_t encode_candidate(const FiniteHomMagma& m) {
  check_order(m.order());
  Candidate c{m.order()};
  std::copy(m.mul_table().begin(), m.mul_table().end(), c.mul.begin());
  std::copy(m.alpha_map().begin(), m.alpha_map().end(), c.alpha.begin());
  return encode(c);
}

std::uint64_t canonical_index(std::size_t order, std::uint64_t index) {
  check_order(order);
  const Candidate c = decode(order, index);
  std::uint64_t best = index;
  for (const auto& p : permutations(order)) best = std::min(best, relabeled_index(c, p));
  return best;
}

namespace serial {

EnumerationResult enumerate(const EnumerateOptions& opts) {
  check_order(opts.order);
  Partial all{empty_census(opts), {}};
  scan_range(opts.order, 0, all.census.total_candidates, opts, permutations(opts.order), all);
  return finish(opts, all.census, std::move(all.matches));
}

}  // namespace serial

namespace parallel {

// Contiguous index ranges are scanned independently; counts merge by
// addition and matches are concatenated in range order, which is global
// index order.
EnumerationResult enumerate(const EnumerateOptions& opts) {
  check_order(opts.order);
  const Census base = empty_census(opts);
  const auto perms = permutations(opts.order);
  const std::uint64_t total = base.total_candidates;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, total / 64 + 1));
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::vector<Partial> parts(static_cast<std::size_t>(chunks), Partial{Census{}, {}});

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < chunks; ++k) {
    const std::uint64_t begin = static_cast<std::uint64_t>(k) * chunk;
    scan_range(opts.order, begin, std::min(total, begin + chunk), opts, perms, parts[k]);
  }

  Census census = base;
  std::vector<std::uint64_t> matches;
  for (auto& p : parts) {
    merge_into(census, p.census);
    for (auto index : p.matches) {
      if (matches.size() >= opts.limit) break;
      matches.push_back(index);
    }
  }
  return finish(opts, census, std::move(matches));
}

}  // namespace parallel

EnumerationResult enumerate(const EnumerateOptions& opts) {
  return opts.order >= 3 ? parallel::enumerate(opts) : serial::enumerate(opts);
}

std::string format_census(const Census& c) {
  auto yn = [](bool b) { return b ? "T" : "F"; };
  std::string out = "order " + std::to_string(c.order) + ", " + std::to_string(c.total_candidates) +
                    " candidates\n";
  out += c.up_to_iso ? "hom  sg  mult  inv       count     classes\n" : "hom  sg  mult  inv       count\n";
  for (LawMask m = 16; m-- > 0;) {
    if (c.counts[m] == 0) continue;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-5s%-4s%-6s%-4s%10llu", yn(m & kHomAssociative), yn(m & kAssociative),
                  yn(m & kMultiplicative), yn(m & kInvolutiveAlpha), static_cast<unsigned long long>(c.counts[m]));
    out += buf;
    if (c.up_to_iso) {
      std::snprintf(buf, sizeof buf, "%12llu", static_cast<unsigned long long>(c.iso_counts[m]));
      out += buf;
    }
    out += '\n';
  }
  if (c.required != 0) {
    out += "matched " + std::to_string(c.matched);
    if (c.up_to_iso) out += " (" + std::to_string(c.matched_iso) + " up to isomorphism)";
    out += '\n';
  }
  return out;
}

}  // namespace homfree
