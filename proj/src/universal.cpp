#include "homfree/universal.hpp"

#include <atomic>

#include "homfree/error.hpp"
#include "homfree/random.hpp"

namespace homfree {

Word random_word(SplitMix64& rng, std::span<const GeneratorId> alphabet, std::size_t max_len) {
  const std::size_t len = 1 + rng.below(max_len);
  std::vector<BracketedLetter> letters;
  letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& g = alphabet[rng.below(alphabet.size())];
    letters.emplace_back(g, static_cast<unsigned>(rng.below(2)));
  }
  return Word(std::move(letters));
}

GeneratorAssignment::GeneratorAssignment(FiniteHomMagma target, std::map<GeneratorId, Element> map)
    : target_(std::move(target)), map_(std::move(map)), report_(classify(target_)) {
  for (const auto& [g, e] : map_) {
    if (e >= target_.order())
      throw PreconditionError("generator '" + g.name() + "' mapped to out-of-range element");
  }
  if (!report_.involutive_hom_semigroup()) {
    throw PreconditionError("target is not an involutive Hom-semigroup:\n" + format_report(report_));
  }
}

GeneratorAssignment GeneratorAssignment::from_labels(
    FiniteHomMagma target, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::map<GeneratorId, Element> map;
  for (const auto& [gen, label] : pairs) {
    auto e = target.find(label);
    if (!e) throw PreconditionError("target has no element labelled '" + label + "'");
    map.insert_or_assign(GeneratorId(gen), *e);
  }
  return GeneratorAssignment(std::move(target), std::move(map));
}

Element GeneratorAssignment::at(const GeneratorId& g) const {
  auto it = map_.find(g);
  if (it == map_.end()) throw MissingAssignmentError(g.name());
  return it->second;
}

std::vector<GeneratorId> GeneratorAssignment::alphabet() const {
  std::vector<GeneratorId> out;
  for (const auto& [g, e] : map_) out.push_back(g);
  return out;
}

Element extend(const GeneratorAssignment& assign, const Word& w) {
  const auto& target = assign.target();
  auto letter_value = [&](const BracketedLetter& l) {
    const Element fx = assign.at(l.gen);
    return l.bit ? target.alpha(fx) : fx;
  };
  Element acc = letter_value(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) acc = target.mul(letter_value(w[i]), acc);
  return acc;
}

namespace {

std::optional<MorphismViolation> check_sample(const GeneratorAssignment& assign, std::span<const GeneratorId> alphabet,
                                              std::size_t max_len, std::uint64_t seed, std::uint64_t i,
                                              const Extender& ext) {
  auto rng = SplitMix64::stream(seed, i);
  Word u = random_word(rng, alphabet, max_len);
  Word v = random_word(rng, alphabet, max_len);
  const auto& target = assign.target();
  const Element fu = ext(assign, u);
  const Element fv = ext(assign, v);
  if (ext(assign, diamond(u, v)) != target.mul(fu, fv))
    return MorphismViolation{MorphismViolation::Law::Product, i, std::move(u), std::move(v)};
  if (ext(assign, alpha_word(u)) != target.alpha(fu))
    return MorphismViolation{MorphismViolation::Law::Alpha, i, std::move(u), std::move(v)};
  return std::nullopt;
}

Extender resolve(const Extender& ext) { return ext ? ext : Extender(&extend); }

}  // namespace

namespace serial {

std::optional<MorphismViolation> verify_morphism(const GeneratorAssignment& assign, std::size_t max_len,
                                                 std::uint64_t samples, std::uint64_t seed, const Extender& ext) {
  const auto alphabet = assign.alphabet();
  if (alphabet.empty() || max_len == 0) return std::nullopt;
  const auto fn = resolve(ext);
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (auto v = check_sample(assign, alphabet, max_len, seed, i, fn)) return v;
  }
  return std::nullopt;
}

}  // namespace serial

std::optional<MorphismViolation> verify_morphism(const GeneratorAssignment& assign, std::size_t max_len,
                                                 std::uint64_t samples, std::uint64_t seed, const Extender& ext) {
  const auto alphabet = assign.alphabet();
  if (alphabet.empty() || max_len == 0) return std::nullopt;
  const auto fn = resolve(ext);
  const auto n = static_cast<std::int64_t>(samples);
  std::atomic<std::int64_t> best{n};
  std::vector<std::optional<MorphismViolation>> found(samples);

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    found[i] = check_sample(assign, alphabet, max_len, seed, static_cast<std::uint64_t>(i), fn);
    if (found[i]) {
      auto cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  const auto i = best.load();
  if (i == n) return std::nullopt;
  return found[i];
}

std::optional<UniquenessViolation> verify_uniqueness(const GeneratorAssignment& assign, std::size_t max_len) {
  const auto alphabet = assign.alphabet();
  const auto& target = assign.target();
  for (const auto& w : all_words(alphabet, max_len)) {
    const Element value = extend(assign, w);
    const auto letters = w.letters();
    for (std::size_t s = 1; s < w.size(); ++s) {
      std::vector<BracketedLetter> head;
      for (std::size_t p = 0; p < s; ++p) head.push_back(p + 1 < s ? letters[p].flipped() : letters[p]);
      const Word u(std::move(head));
      const Word tail = make_word(letters.subspan(s));
      Element right = extend(assign, tail);
      if ((s - 1) % 2 == 1) right = target.alpha(right);
      if (target.mul(extend(assign, u), right) != value) return UniquenessViolation{w, s};
    }
  }
  return std::nullopt;
}

}  // namespace homfree
