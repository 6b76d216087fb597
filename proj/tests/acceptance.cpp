// Acceptance gate: one criterion per section, one [PASS]/[FAIL] line each, exit code
// equal to the number of failed criteria. Checks keep going after a failure so every
// broken case shows up in the log. Built in Release along with the rest of the suite;
// nothing here is compiled out.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <sys/wait.h>

#include "ctm/ctm.hpp"

#ifndef CTM_CLI_PATH
#error "CTM_CLI_PATH must point at the ctm binary"
#endif

namespace {

int g_check_failures = 0;

#define CHECK(cond, context)                                                          \
  do {                                                                                \
    if (!(cond)) {                                                                    \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << context << "\n"; \
      ++g_check_failures;                                                             \
    }                                                                                 \
  } while (0)

using ctm::BigInt;
using ctm::GroupFamily;
using ctm::GroupKind;
using ctm::Partition;
using ctm::Rational;
using ctm::Staircase;
using ctm::TypeVector;

// Fixed seed for every statistical criterion. The bounds below are 4-standard-error
// bounds, so a seed change risks a roughly-1-in-10000 flake per check; this one has
// been run and passes with margin.
constexpr std::uint64_t kSuiteSeed = 20250814;
constexpr std::int64_t kSamples = 100000;

int mc_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min(8u, hw));
}

Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// ---- C1: tensor-power dimension bookkeeping -------------------------------------
// Summing walk-count times irrep dimension over the final layer must reproduce the
// dimension of the full tensor power: (2n)^r, (2n+1)^r or n^(r+s).

void criterion_identity_sums() {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 0; r <= 8; ++r) {
      BigInt sp_total = 0;
      for (const auto& [shape, count] : ctm::updown_distribution(r, n))
        sp_total += count * ctm::dim_symplectic(shape, n);
      CHECK(sp_total == ctm::pow(BigInt(2 * n), static_cast<unsigned>(r)),
            "sp identity n=" << n << " r=" << r << " got " << sp_total);

      if (n > r) {
        BigInt even_total = 0, odd_total = 0;
        for (const auto& [shape, count] : ctm::updown_distribution(r)) {
          even_total += count * ctm::dim_so_even(shape, n);
          odd_total += count * ctm::dim_so_odd(shape, n);
        }
        CHECK(even_total == ctm::pow(BigInt(2 * n), static_cast<unsigned>(r)),
              "so-even identity n=" << n << " r=" << r << " got " << even_total);
        CHECK(odd_total == ctm::pow(BigInt(2 * n + 1), static_cast<unsigned>(r)),
              "so-odd identity n=" << n << " r=" << r << " got " << odd_total);
      }
    }

    for (int r = 0; r <= 8; ++r)
      for (int s = 0; r + s <= 8; ++s) {
        BigInt u_total = 0;
        for (const auto& [shape, count] :
             ctm::staircase_distribution(n, TypeVector::canonical(r, s)))
          u_total += count * ctm::dim_unitary(shape, n);
        CHECK(u_total == ctm::pow(BigInt(n), static_cast<unsigned>(r + s)),
              "u identity n=" << n << " r=" << r << " s=" << s << " got " << u_total);
      }
  }
}

// ---- C2: the two dimension formulas agree ---------------------------------------

void criterion_dual_dimensions() {
  for (int size = 0; size <= 6; ++size)
    for (const auto& shape : ctm::partitions_of(size)) {
      const int l = shape.length();
      for (int n = std::max(1, l); n <= 12; ++n) {
        CHECK(ctm::dim_symplectic(shape, n) == ctm::dim_symplectic_hook_content(shape, n),
              "sp dims disagree at " << shape.to_string() << " n=" << n);
        CHECK(ctm::dim_so_odd(shape, n) == ctm::dim_so_odd_hook_content(shape, n),
              "so-odd dims disagree at " << shape.to_string() << " n=" << n);
        if (n > l)
          CHECK(ctm::dim_so_even(shape, n) == ctm::dim_so_even_hook_content(shape, n),
                "so-even dims disagree at " << shape.to_string() << " n=" << n);
      }
    }
}

// ---- C3: DP counters equal brute-force enumeration ------------------------------

void criterion_oracle_equivalence() {
  const std::vector<std::optional<int>> bounds = {std::nullopt, 1, 2, 3};
  for (int r = 0; r <= 8; ++r)
    for (const auto& bound : bounds) {
      auto dist = ctm::updown_distribution(r, bound);
      BigInt support_total = 0;
      for (const auto& [shape, count] : dist) support_total += count;
      BigInt checked_total = 0;
      // Candidate endpoints: every partition whose size fits the walk parity. Shapes
      // outside the distribution's support must come back as zero from both counters.
      for (int size = r % 2; size <= r; size += 2)
        for (const auto& shape : ctm::partitions_of(size)) {
          if (bound && shape.length() > *bound) continue;
          BigInt dp = ctm::count_updown(shape, r, bound);
          BigInt brute = ctm::brute_force_updown(shape, r, bound);
          auto it = dist.find(shape);
          BigInt from_dist = it == dist.end() ? BigInt(0) : it->second;
          checked_total += dp;
          CHECK(dp == brute, "partition walk count mismatch at " << shape.to_string()
                                                                 << " r=" << r);
          CHECK(dp == from_dist, "distribution disagrees with targeted count at "
                                     << shape.to_string() << " r=" << r);
        }
      CHECK(checked_total == support_total,
            "candidate sweep missed part of the support at r=" << r);
    }

  for (int height = 1; height <= 4; ++height)
    for (int len = 0; len <= 6; ++len)
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<int> steps(len);
        int ups = 0;
        for (int t = 0; t < len; ++t) {
          steps[t] = (mask >> t) & 1 ? 1 : -1;
          if (steps[t] == 1) ++ups;
        }
        const int downs = len - ups;
        TypeVector type(steps);
        auto dist = ctm::staircase_distribution(height, type);
        BigInt support_total = 0;
        for (const auto& [shape, count] : dist) support_total += count;
        BigInt checked_total = 0;

        // Candidate endpoints: weakly decreasing, entries within the step budgets,
        // total weight equal to ups - downs.
        std::vector<int> entries(height);
        std::function<void(int, int, int)> sweep = [&](int idx, int cap, int sum) {
          if (idx == height) {
            if (sum != ups - downs) return;
            Staircase shape(entries);
            BigInt dp = ctm::count_staircase(shape, type);
            BigInt brute = ctm::brute_force_staircase(shape, type);
            auto it = dist.find(shape);
            BigInt from_dist = it == dist.end() ? BigInt(0) : it->second;
            checked_total += dp;
            CHECK(dp == brute, "staircase walk count mismatch at " << shape.to_string()
                                                                   << " mask=" << mask);
            CHECK(dp == from_dist, "staircase distribution disagrees at "
                                       << shape.to_string() << " mask=" << mask);
            return;
          }
          for (int v = -downs; v <= cap; ++v) {
            entries[idx] = v;
            sweep(idx + 1, v, sum + v);
          }
        };
        sweep(0, ups, 0);
        CHECK(checked_total == support_total,
              "staircase sweep missed part of the support at height=" << height
                                                                      << " mask=" << mask);
      }

  // Walk counts depend on the type only through the number of up and down steps.
  std::mt19937 rng(987654321u);
  for (int trial = 0; trial < 100; ++trial) {
    const int height = 1 + static_cast<int>(rng() % 4);
    const int plus = static_cast<int>(rng() % 5);
    const int minus = static_cast<int>(rng() % 5);
    TypeVector canonical = TypeVector::canonical(plus, minus);
    std::vector<int> steps = canonical.steps();
    std::shuffle(steps.begin(), steps.end(), rng);
    CHECK(ctm::staircase_distribution(height, TypeVector(steps)) ==
              ctm::staircase_distribution(height, canonical),
          "type permutation changed the distribution (trial " << trial << ")");
  }
}

// ---- C4: closed-form spot checks -------------------------------------------------

void criterion_closed_forms() {
  for (int n = 3; n <= 10; ++n) {
    const Rational sp_r2 = Rational(1) + Rational(BigInt(1), BigInt(n) * (2 * n + 1)) +
                           Rational(BigInt(1), BigInt(n - 1) * (2 * n + 1));
    CHECK(ctm::moment_symplectic(n, 1, 2) == sp_r2,
          "sp k=1 r=2 closed form fails at n=" << n);

    for (int k = 1; k <= 3; ++k) {
      const Rational sp_r1 =
          Rational(BigInt(1), ctm::pow(BigInt(2 * n), static_cast<unsigned>(2 * k - 1)));
      CHECK(ctm::moment_symplectic(n, k, 1) == sp_r1,
            "sp r=1 closed form fails at n=" << n << " k=" << k);
    }

    const Rational u_11 = Rational(1) + Rational(BigInt(1), BigInt(n) * n - 1);
    CHECK(ctm::moment_unitary(n, 1, 1, 1) == u_11,
          "u k=1 r=s=1 closed form fails at n=" << n);
  }
}

// ---- C5: gap to the Gaussian limit decays when the rank doubles ------------------

void criterion_gap_decay() {
  auto moment_gap = [](GroupKind kind, int k, int r, int s, int n) {
    return rational_abs(ctm::trace_moment({kind, n}, k, r, s) -
                        ctm::gaussian_limit(kind, r, s));
  };

  const GroupKind real_kinds[] = {GroupKind::Symplectic, GroupKind::SpecialOrthogonalEven,
                                  GroupKind::SpecialOrthogonalOdd};
  for (GroupKind kind : real_kinds)
    for (int k = 1; k <= 2; ++k)
      for (int r = 1; r <= 6; ++r)
        for (int n0 : {r + 1, 2 * (r + 1)}) {
          const Rational gap_small = moment_gap(kind, k, r, 0, n0);
          if (gap_small == 0) continue;
          const Rational gap_large = moment_gap(kind, k, r, 0, 2 * n0);
          const GroupFamily family_at{kind, n0};
          CHECK(gap_large * 5 <= gap_small * 3,
                "gap did not shrink to 0.6x: " << family_at.describe() << " k=" << k
                                               << " r=" << r);
        }

  for (int k = 1; k <= 2; ++k)
    for (int r = 1; r <= 3; ++r)
      for (int n0 : {r + 1, 2 * (r + 1)}) {
        const Rational gap_small = moment_gap(GroupKind::Unitary, k, r, r, n0);
        if (gap_small == 0) continue;
        const Rational gap_large = moment_gap(GroupKind::Unitary, k, r, r, 2 * n0);
        CHECK(gap_large * 5 <= gap_small * 3,
              "unitary gap did not shrink to 0.6x: n0=" << n0 << " k=" << k << " r=" << r);
      }
}

// ---- C6: finite-group brute force ------------------------------------------------

void criterion_finite_groups() {
  const ctm::FiniteGroup groups[] = {ctm::FiniteGroup::symmetric_3(),
                                     ctm::FiniteGroup::quaternion_8()};
  for (const auto& group : groups) {
    std::string why;
    CHECK(group.check_axioms(&why), group.name() << " axioms: " << why);
    for (int k = 1; k <= 2; ++k)
      for (std::size_t i = 0; i < group.characters().size(); ++i) {
        const auto& chi = group.characters()[i];
        const Rational expected(
            BigInt(1), ctm::pow(BigInt(chi.dimension), static_cast<unsigned>(2 * k - 1)));
        CHECK(ctm::finite_commutator_average(group, static_cast<int>(i), k) == expected,
              group.name() << " character " << chi.name << " k=" << k);
      }
  }
}

// ---- C7: Monte Carlo means vs exact values ---------------------------------------

void criterion_monte_carlo_agreement() {
  const int workers = mc_workers();

  {
    auto em = ctm::estimate_moments({GroupKind::Unitary, 10}, 1, 1, 1, kSamples,
                                    kSuiteSeed, workers);
    const auto& m = em.moments[3];  // (r, s) = (1, 1)
    const Rational exact = ctm::trace_moment({GroupKind::Unitary, 10}, 1, 1, 1);
    CHECK(exact == Rational(100, 99), "U(10) exact E[T conj T] is not 100/99");
    const double target = exact.convert_to<double>();
    CHECK(std::abs(m.mean.real() - target) <= 4 * m.std_error,
          "U(10) E[T conj T]: got " << m.mean.real() << " want " << target << " se "
                                    << m.std_error);
    CHECK(std::abs(m.mean.imag()) <= 4 * m.std_error,
          "U(10) E[T conj T] has a non-real mean: " << m.mean.imag());
  }

  {
    auto em = ctm::estimate_moments({GroupKind::Symplectic, 5}, 1, 2, 0, kSamples,
                                    kSuiteSeed, workers);
    const auto& m1 = em.moments[1];
    const auto& m2 = em.moments[2];
    CHECK(ctm::moment_symplectic(5, 1, 1) == Rational(1, 10),
          "sp n=5 exact E[T] is not 1/10");
    CHECK(std::abs(m1.mean.real() - 0.1) <= 4 * m1.std_error,
          "sp n=5 E[T]: got " << m1.mean.real() << " se " << m1.std_error);
    const double target = ctm::moment_symplectic(5, 1, 2).convert_to<double>();
    CHECK(std::abs(m2.mean.real() - target) <= 4 * m2.std_error,
          "sp n=5 E[T^2]: got " << m2.mean.real() << " want " << target << " se "
                                << m2.std_error);
  }

  {
    auto em = ctm::estimate_moments({GroupKind::SpecialOrthogonalOdd, 5}, 1, 2, 0,
                                    kSamples, kSuiteSeed, workers);
    const auto& m2 = em.moments[2];
    const Rational exact = ctm::moment_so_odd(5, 1, 2);
    CHECK(exact == Rational(739, 715), "SO(11) exact E[T^2] is not 739/715");
    const double target = exact.convert_to<double>();
    CHECK(std::abs(m2.mean.real() - target) <= 4 * m2.std_error,
          "SO(11) E[T^2]: got " << m2.mean.real() << " want " << target << " se "
                                << m2.std_error);
  }
}

// ---- C8: limiting distribution shape ----------------------------------------------

void criterion_distribution_shape() {
  const int workers = mc_workers();
  const double n = static_cast<double>(kSamples);

  {
    // Complex case: both trace coordinates should approach variance 1/2. The squared
    // coordinates come from the estimated mixed moments, which the estimator computes
    // from exactly the same samples: (Re t)^2 = (Re(t^2) + |t|^2) / 2 pointwise.
    auto em = ctm::estimate_moments({GroupKind::Unitary, 20}, 1, 2, 2, kSamples,
                                    kSuiteSeed, workers);
    auto idx = [](int r, int s) { return static_cast<std::size_t>(r) * 3 + s; };
    const std::complex<double> m10 = em.moments[idx(1, 0)].mean;
    const std::complex<double> m20 = em.moments[idx(2, 0)].mean;
    const double m11 = em.moments[idx(1, 1)].mean.real();
    const double var_re = (m20.real() + m11) / 2 - m10.real() * m10.real();
    const double var_im = (m11 - m20.real()) / 2 - m10.imag() * m10.imag();
    const double se_scale = std::sqrt(2.0 / (n - 1));
    CHECK(std::abs(var_re - 0.5) <= 4 * var_re * se_scale,
          "U(20) Var(Re T): got " << var_re);
    CHECK(std::abs(var_im - 0.5) <= 4 * var_im * se_scale,
          "U(20) Var(Im T): got " << var_im);
  }

  {
    // Real case: the trace should look standard normal, so skewness near 0 and
    // kurtosis near 3, with the usual normal-theory standard errors.
    auto em = ctm::estimate_moments({GroupKind::Symplectic, 10}, 1, 4, 0, kSamples,
                                    kSuiteSeed, workers);
    const double m1 = em.moments[1].mean.real();
    const double m2 = em.moments[2].mean.real();
    const double m3 = em.moments[3].mean.real();
    const double m4 = em.moments[4].mean.real();
    const double mu2 = m2 - m1 * m1;
    const double mu3 = m3 - 3 * m1 * m2 + 2 * m1 * m1 * m1;
    const double mu4 = m4 - 4 * m1 * m3 + 6 * m1 * m1 * m2 - 3 * m1 * m1 * m1 * m1;
    const double skew = mu3 / std::pow(mu2, 1.5);
    const double kurt = mu4 / (mu2 * mu2);
    CHECK(std::abs(skew) <= 4 * std::sqrt(6.0 / n), "sp n=10 skewness: got " << skew);
    CHECK(std::abs(kurt - 3.0) <= 4 * std::sqrt(24.0 / n), "sp n=10 kurtosis: got " << kurt);
  }
}

// ---- C9: simulate output is byte-stable -------------------------------------------

std::string run_simulate(int workers) {
  const std::string command =
      std::string(CTM_CLI_PATH) +
      " simulate --group u --n 4 --k 1 --r-max 2 --s-max 2 --samples 2000 --seed 42"
      " --workers " +
      std::to_string(workers) + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return "<nonzero exit>";
  return output;
}

void criterion_determinism() {
  std::vector<std::string> outputs;
  for (int w : {1, 4, 8, 1, 4, 8}) outputs.push_back(run_simulate(w));
  CHECK(outputs[0].size() > 2 && outputs[0][0] == '{',
        "simulate produced no JSON: " << outputs[0]);
  for (std::size_t i = 1; i < outputs.size(); ++i)
    CHECK(outputs[i] == outputs[0], "simulate run " << i << " differs from run 0");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"identity sums", criterion_identity_sums},
      {"dual dimension formulas", criterion_dual_dimensions},
      {"oracle equivalence", criterion_oracle_equivalence},
      {"closed-form spot checks", criterion_closed_forms},
      {"gap decay", criterion_gap_decay},
      {"finite groups", criterion_finite_groups},
      {"Monte Carlo agreement", criterion_monte_carlo_agreement},
      {"distribution shape", criterion_distribution_shape},
      {"determinism", criterion_determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    g_check_failures = 0;
    const auto start = std::chrono::steady_clock::now();
    criteria[i].run();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const bool ok = g_check_failures == 0;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " C" << i + 1 << " " << criteria[i].name
              << " [" << std::fixed << std::setprecision(1) << elapsed.count() << "s]\n";
    if (!ok) ++failed;
  }
  if (failed == 0)
    std::cout << "all " << criteria.size() << " criteria passed\n";
  else
    std::cout << failed << " of " << criteria.size() << " criteria failed\n";
  return failed;
}
