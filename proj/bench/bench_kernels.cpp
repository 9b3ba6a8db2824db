// Serial reference vs OpenMP kernel, wall clock. Results must agree; a
// disagreement is reported and makes the exit status nonzero.
//   bench_kernels [--order N] [--reps R]

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "homfree/algebra.hpp"
#include "homfree/enumerate.hpp"
#include "homfree/finite.hpp"
#include "homfree/random.hpp"
#include "homfree/universal.hpp"

using namespace homfree;

namespace {

int disagreements = 0;

template <typename Fn>
double best_of(int reps, Fn fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <typename Serial, typename Parallel>
void compare(const char* name, int reps, Serial s, Parallel p) {
  decltype(s()) rs{}, rp{};
  const double ts = best_of(reps, [&] { rs = s(); });
  const double tp = best_of(reps, [&] { rp = p(); });
  const bool same = rs == rp;
  if (!same) ++disagreements;
  std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
              same ? "agree" : "DISAGREE");
}

// Z_n with identity alpha: every law holds, so every kernel scans everything.
FiniteHomMagma cyclic(std::size_t n) {
  std::vector<Element> mul(n * n), alpha(n);
  for (std::size_t a = 0; a < n; ++a) {
    alpha[a] = static_cast<Element>(a);
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteHomMagma::with_default_labels(n, std::move(mul), std::move(alpha));
}

AlgebraElement random_element(SplitMix64& rng, const std::vector<GeneratorId>& alphabet, int terms) {
  AlgebraElement e;
  for (int i = 0; i < terms; ++i)
    e.accumulate(random_word(rng, alphabet, 8),
                 Rational(static_cast<long>(rng.below(19)) - 9, static_cast<long>(1 + rng.below(6))));
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel kernel timings"};
  std::size_t order = 240;
  int reps = 3;
  app.add_option("--order", order, "order of the magma used for law checks");
  app.add_option("--reps", reps, "repetitions; the best time is kept");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());

  const auto m = cyclic(order);
  const auto v = m.view();
  const std::string tag = " (n=" + std::to_string(order) + ")";
  compare(("hom-associativity" + tag).c_str(), reps, [&] { return serial::hom_associative_violation(v); },
          [&] { return parallel::hom_associative_violation(v); });
  compare(("associativity" + tag).c_str(), reps, [&] { return serial::associative_violation(v); },
          [&] { return parallel::associative_violation(v); });
  compare(("multiplicativity" + tag).c_str(), reps, [&] { return serial::multiplicative_violation(v); },
          [&] { return parallel::multiplicative_violation(v); });

  auto census = [](auto fn) {
    return [fn] {
      const auto r = fn(EnumerateOptions{3, kInvolutiveHomSemigroup, true, 0});
      return std::pair{r.census.counts, r.census.iso_counts};
    };
  };
  compare("census, order 3", 1, census(serial::enumerate), census(parallel::enumerate));

  const auto assign = GeneratorAssignment::from_labels(fixture("involutive"), {{"a", "x"}, {"b", "y"}, {"c", "z"}});
  compare("verify_morphism, 200k pairs", reps,
          [&] { return serial::verify_morphism(assign, 12, 200000, 1).has_value(); },
          [&] { return verify_morphism(assign, 12, 200000, 1).has_value(); });

  SplitMix64 rng(42);
  const std::vector<GeneratorId> abc{GeneratorId("a"), GeneratorId("b"), GeneratorId("c")};
  const auto a = random_element(rng, abc, 300), b = random_element(rng, abc, 300);
  compare("diamond_alg, 300 x 300 terms", reps, [&] { return serial::diamond_alg(a, b); },
          [&] { return parallel::diamond_alg(a, b); });

  return disagreements == 0 ? 0 : 1;
}
