#include <algorithm>
#include <atomic>
#include <cstdint>

#include "homfree/finite.hpp"

namespace homfree {

namespace {

// First violation with outermost index fixed to `a`, scanning b then c.
std::optional<Triple> hom_assoc_row(const MagmaView& m, Element a) {
  const auto n = static_cast<Element>(m.order);
  const Element alpha_a = m.alpha[a];
  for (Element b = 0; b < n; ++b) {
    const Element ab = m(a, b);
    for (Element c = 0; c < n; ++c) {
      if (m(alpha_a, m(b, c)) != m(ab, m.alpha[c])) return Triple{a, b, c};
    }
  }
  return std::nullopt;
}

std::optional<Triple> assoc_row(const MagmaView& m, Element a) {
  const auto n = static_cast<Element>(m.order);
  for (Element b = 0; b < n; ++b) {
    const Element ab = m(a, b);
    for (Element c = 0; c < n; ++c) {
      if (m(ab, c) != m(a, m(b, c))) return Triple{a, b, c};
    }
  }
  return std::nullopt;
}

std::optional<Pair> mult_row(const MagmaView& m, Element a) {
  const auto n = static_cast<Element>(m.order);
  for (Element b = 0; b < n; ++b) {
    if (m.alpha[m(a, b)] != m(m.alpha[a], m.alpha[b])) return Pair{a, b};
  }
  return std::nullopt;
}

template <typename RowFn>
auto first_serial(const MagmaView& m, RowFn row) -> decltype(row(m, Element{0})) {
  for (Element a = 0; a < m.order; ++a) {
    if (auto w = row(m, a)) return w;
  }
  return std::nullopt;
}

template <typename RowFn>
auto first_parallel(const MagmaView& m, RowFn row) -> decltype(row(m, Element{0})) {
  using Result = decltype(row(m, Element{0}));
  const auto n = static_cast<std::int64_t>(m.order);
  std::atomic<std::int64_t> best{n};
  std::vector<Result> rows(m.order);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t a = 0; a < n; ++a) {
    if (a > best.load(std::memory_order_relaxed)) continue;
    rows[a] = row(m, static_cast<Element>(a));
    if (rows[a]) {
      auto cur = best.load(std::memory_order_relaxed);
      while (a < cur && !best.compare_exchange_weak(cur, a, std::memory_order_relaxed)) {
      }
    }
  }
  const auto a = best.load();
  if (a == n) return std::nullopt;
  return rows[a];
}

}  // namespace

namespace serial {

std::optional<Triple> hom_associative_violation(MagmaView m) { return first_serial(m, hom_assoc_row); }
std::optional<Triple> associative_violation(MagmaView m) { return first_serial(m, assoc_row); }
std::optional<Pair> multiplicative_violation(MagmaView m) { return first_serial(m, mult_row); }

std::optional<Element> involutive_violation(MagmaView m) {
  for (Element a = 0; a < m.order; ++a) {
    if (m.alpha[m.alpha[a]] != a) return a;
  }
  return std::nullopt;
}

}  // namespace serial

namespace parallel {

std::optional<Triple> hom_associative_violation(MagmaView m) { return first_parallel(m, hom_assoc_row); }
std::optional<Triple> associative_violation(MagmaView m) { return first_parallel(m, assoc_row); }
std::optional<Pair> multiplicative_violation(MagmaView m) { return first_parallel(m, mult_row); }

std::optional<Element> involutive_violation(MagmaView m) {
  const auto n = static_cast<std::int64_t>(m.order);
  std::int64_t best = n;
#pragma omp parallel for reduction(min : best)
  for (std::int64_t a = 0; a < n; ++a) {
    if (m.alpha[m.alpha[a]] != static_cast<Element>(a)) best = std::min(best, a);
  }
  if (best == n) return std::nullopt;
  return static_cast<Element>(best);
}

}  // namespace parallel

}  // namespace homfree
