#include "homfree/finite.hpp"

#include <algorithm>
#include <set>

#include "homfree/error.hpp"

namespace homfree {

namespace {

// Below this order the OpenMP fork costs more than the n^3 scan.
constexpr std::size_t kParallelOrder = 24;

bool use_parallel(const FiniteHomMagma& m) { return m.order() >= kParallelOrder; }

template <std::size_t N>
std::vector<std::string> to_labels(const FiniteHomMagma& m, const std::array<Element, N>& w) {
  std::vector<std::string> out;
  for (auto e : w) out.push_back(m.label(e));
  return out;
}

std::string witness_text(const std::vector<std::string>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w[i];
  }
  return out + ")";
}

}  // namespace

std::string default_label(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "e" + std::to_string(index);
}

FiniteHomMagma::FiniteHomMagma(std::vector<std::string> labels, std::vector<Element> mul,
                               std::vector<Element> alpha)
    : labels_(std::move(labels)), mul_(std::move(mul)), alpha_(std::move(alpha)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw PreconditionError("structure must have at least one element");
  if (mul_.size() != n * n)
    throw PreconditionError("multiplication table has " + std::to_string(mul_.size()) + " entries, expected " +
                            std::to_string(n * n));
  if (alpha_.size() != n)
    throw PreconditionError("unary map has " + std::to_string(alpha_.size()) + " entries, expected " +
                            std::to_string(n));
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw PreconditionError("empty element label");
    if (!seen.insert(l).second) throw PreconditionError("duplicate element label '" + l + "'");
  }
  for (std::size_t i = 0; i < mul_.size(); ++i) {
    if (mul_[i] >= n)
      throw PreconditionError("table entry at row " + std::to_string(i / n) + ", column " + std::to_string(i % n) +
                              " out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha_[i] >= n) throw PreconditionError("unary map entry " + std::to_string(i) + " out of range");
  }
}

FiniteHomMagma FiniteHomMagma::with_default_labels(std::size_t order, std::vector<Element> mul,
                                                   std::vector<Element> alpha) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order; ++i) labels.push_back(default_label(i));
  return FiniteHomMagma(std::move(labels), std::move(mul), std::move(alpha));
}

std::optional<Element> FiniteHomMagma::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

std::optional<Triple> check_hom_associative(const FiniteHomMagma& m) {
  return use_parallel(m) ? parallel::hom_associative_violation(m.view())
                         : serial::hom_associative_violation(m.view());
}

std::optional<Triple> check_associative(const FiniteHomMagma& m) {
  return use_parallel(m) ? parallel::associative_violation(m.view()) : serial::associative_violation(m.view());
}

std::optional<Pair> check_multiplicative(const FiniteHomMagma& m) {
  return use_parallel(m) ? parallel::multiplicative_violation(m.view())
                         : serial::multiplicative_violation(m.view());
}

std::optional<Element> check_involutive_alpha(const FiniteHomMagma& m) {
  return use_parallel(m) ? parallel::involutive_violation(m.view()) : serial::involutive_violation(m.view());
}

LawReport classify(const FiniteHomMagma& m) {
  LawReport r;
  if (auto w = check_hom_associative(m)) r.hom_associative_witness = to_labels(m, *w);
  if (auto w = check_associative(m)) r.associative_witness = to_labels(m, *w);
  if (auto w = check_multiplicative(m)) r.multiplicative_witness = to_labels(m, *w);
  if (auto w = check_involutive_alpha(m)) r.involutive_alpha_witness = std::vector<std::string>{m.label(*w)};
  return r;
}

std::string format_report(const LawReport& r) {
  std::string out;
  auto line = [&](std::string_view name, const std::optional<std::vector<std::string>>& witness) {
    std::string row(name);
    row.resize(18, ' ');
    if (witness) {
      row += "false  " + witness_text(*witness);
    } else {
      row += "true";
    }
    out += row + "\n";
  };
  line("hom_associative", r.hom_associative_witness);
  line("associative", r.associative_witness);
  line("multiplicative", r.multiplicative_witness);
  line("involutive_alpha", r.involutive_alpha_witness);
  return out;
}

std::optional<Element> has_zero(const FiniteHomMagma& m) {
  const auto n = static_cast<Element>(m.order());
  if (n < 2) return std::nullopt;
  for (Element z = 0; z < n; ++z) {
    bool absorbing = true;
    for (Element x = 0; x < n && absorbing; ++x) absorbing = m.mul(x, z) == z && m.mul(z, x) == z;
    if (absorbing) return z;
  }
  return std::nullopt;
}

FiniteHomMagma adjoin_zero(const FiniteHomMagma& m) {
  if (auto w = check_associative(m)) {
    throw PreconditionError("adjoin_zero needs an associative product; (ab)c != a(bc) at " +
                            witness_text(to_labels(m, *w)));
  }
  if (auto zero = has_zero(m)) {
    return FiniteHomMagma(m.labels(), m.mul_table(), std::vector<Element>(m.order(), *zero));
  }

  const std::size_t n = m.order();
  const auto zero = static_cast<Element>(n);
  std::string zero_label = "0";
  while (m.find(zero_label)) zero_label += "'";

  auto labels = m.labels();
  labels.push_back(zero_label);
  std::vector<Element> mul((n + 1) * (n + 1), zero);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mul[a * (n + 1) + b] = m.mul(static_cast<Element>(a), static_cast<Element>(b));
    }
  }
  return FiniteHomMagma(std::move(labels), std::move(mul), std::vector<Element>(n + 1, zero));
}

FiniteHomMagma relabel(const FiniteHomMagma& m, std::span<const Element> perm) {
  const std::size_t n = m.order();
  if (perm.size() != n) throw PreconditionError("permutation size does not match order");
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) throw PreconditionError("not a permutation");
    hit[p] = true;
  }
  std::vector<std::string> labels(n);
  std::vector<Element> mul(n * n);
  std::vector<Element> alpha(n);
  for (Element a = 0; a < n; ++a) {
    labels[perm[a]] = m.label(a);
    alpha[perm[a]] = perm[m.alpha(a)];
    for (Element b = 0; b < n; ++b) mul[perm[a] * n + perm[b]] = perm[m.mul(a, b)];
  }
  return FiniteHomMagma(std::move(labels), std::move(mul), std::move(alpha));
}

FiniteHomMagma fixture(std::string_view name) {
  enum : Element { x = 0, y = 1, z = 2 };
  std::vector<std::string> labels{"x", "y", "z"};
  if (name == "hom_not_sg") {
    return FiniteHomMagma(labels,
                          {y, x, z,   //
                           y, y, z,   //
                           z, z, z},  //
                          {z, z, z});
  }
  if (name == "involutive") {
    return FiniteHomMagma(labels,
                          {y, x, z,   //
                           y, x, z,   //
                           z, z, z},  //
                          {y, x, z});
  }
  throw PreconditionError("unknown fixture '" + std::string(name) + "' (known: hom_not_sg, involutive)");
}

}  // namespace homfree
