#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ctm/haar.hpp"
#include "ctm/rng.hpp"

namespace ctm {

// Fixed-layout histogram: 81 bins of width 0.1 covering [-4.05, 4.05), plus an
// underflow bin in front and an overflow bin behind (83 counters total).
struct TraceHistogram {
  static constexpr int kBins = 81;
  static constexpr double kLow = -4.05;
  static constexpr double kWidth = 0.1;

  std::array<std::int64_t, kBins + 2> counts{};

  void add(double x) {
    if (x < kLow) {
      ++counts[0];
      return;
    }
    int bin = static_cast<int>((x - kLow) / kWidth);
    if (bin >= kBins) {
      ++counts[kBins + 1];
      return;
    }
    ++counts[bin + 1];
  }

  void merge(const TraceHistogram& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
};

struct MomentEstimate {
  int r, s;
  std::complex<double> mean;
  double std_error;  // sqrt(unbiased sample variance / N), scalar also for complex data
};

struct EmpiricalMoments {
  GroupFamily group;
  int k;
  std::uint64_t seed;
  std::int64_t samples;
  std::vector<MomentEstimate> moments;  // r-major over r <= r_max, s <= s_max
  TraceHistogram histogram_re, histogram_im;
};

namespace detail {

struct KahanSum {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Collapsed per-block sums. Blocks have a fixed size, so their contents do not depend
// on the worker count, and the cross-block reduction below is a fixed-shape tree:
// results are bit-identical for any number of workers.
struct BlockSums {
  std::vector<double> re, im, abs2;
  TraceHistogram hist_re, hist_im;

  explicit BlockSums(std::size_t width = 0) : re(width), im(width), abs2(width) {}

  void combine(const BlockSums& other) {
    for (std::size_t i = 0; i < re.size(); ++i) {
      re[i] += other.re[i];
      im[i] += other.im[i];
      abs2[i] += other.abs2[i];
    }
    hist_re.merge(other.hist_re);
    hist_im.merge(other.hist_im);
  }
};

}  // namespace detail

// Monte Carlo estimate of E[(Tr W)^r conj(Tr W)^s] for all r <= r_max, s <= s_max,
// where W is a product of k independent commutators of Haar samples. Real-trace
// families use powers of Re Tr W and require s_max == 0. Sample i draws from the
// substream (seed, i), so results do not depend on the worker count.
inline EmpiricalMoments estimate_moments(const GroupFamily& group, int k, int r_max,
                                         int s_max, std::int64_t samples,
                                         std::uint64_t seed, int workers) {
  if (group.rank < 1) throw std::domain_error("rank must be >= 1");
  if (k < 1) throw std::domain_error("k must be >= 1");
  if (r_max < 0 || s_max < 0) throw std::domain_error("moment orders must be >= 0");
  if (group.real_trace() && s_max != 0)
    throw std::domain_error("s_max must be 0 for real-trace families");
  if (samples < 1) throw std::domain_error("need at least one sample");
  if (workers < 1) throw std::domain_error("need at least one worker");

  constexpr std::int64_t kBlockSize = 4096;
  const std::size_t width = static_cast<std::size_t>(r_max + 1) * (s_max + 1);
  const std::int64_t block_count = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<detail::BlockSums> blocks(block_count, detail::BlockSums(width));

  std::atomic<std::int64_t> next_block{0};
  auto worker = [&]() {
    std::vector<std::complex<double>> t_pow(r_max + 1), c_pow(s_max + 1);
    for (;;) {
      const std::int64_t b = next_block.fetch_add(1);
      if (b >= block_count) return;
      const std::int64_t lo = b * kBlockSize;
      const std::int64_t hi = std::min(samples, lo + kBlockSize);
      std::vector<detail::KahanSum> sum_re(width), sum_im(width), sum_abs2(width);
      detail::BlockSums out(width);
      for (std::int64_t i = lo; i < hi; ++i) {
        SampleRng rng(seed, static_cast<std::uint64_t>(i));
        std::vector<GroupElement> xs, ys;
        xs.reserve(k);
        ys.reserve(k);
        for (int c = 0; c < k; ++c) {
          xs.push_back(sample_haar(group, rng));
          ys.push_back(sample_haar(group, rng));
        }
        const std::complex<double> t = commutator_product_trace(xs, ys);
        out.hist_re.add(t.real());
        out.hist_im.add(t.imag());

        const std::complex<double> base =
            group.real_trace() ? std::complex<double>(t.real(), 0.0) : t;
        t_pow[0] = 1.0;
        for (int r = 1; r <= r_max; ++r) t_pow[r] = t_pow[r - 1] * base;
        c_pow[0] = 1.0;
        for (int s = 1; s <= s_max; ++s) c_pow[s] = c_pow[s - 1] * std::conj(base);
        for (int r = 0; r <= r_max; ++r)
          for (int s = 0; s <= s_max; ++s) {
            const std::size_t idx = static_cast<std::size_t>(r) * (s_max + 1) + s;
            const std::complex<double> z = t_pow[r] * c_pow[s];
            sum_re[idx].add(z.real());
            sum_im[idx].add(z.imag());
            sum_abs2[idx].add(std::norm(z));
          }
      }
      for (std::size_t idx = 0; idx < width; ++idx) {
        out.re[idx] = sum_re[idx].sum;
        out.im[idx] = sum_im[idx].sum;
        out.abs2[idx] = sum_abs2[idx].sum;
      }
      blocks[b] = std::move(out);
    }
  };

  const int thread_count = static_cast<int>(std::min<std::int64_t>(workers, block_count));
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Pairwise tree reduction in fixed block order.
  while (blocks.size() > 1) {
    std::vector<detail::BlockSums> merged;
    merged.reserve((blocks.size() + 1) / 2);
    for (std::size_t i = 0; i < blocks.size(); i += 2) {
      if (i + 1 < blocks.size()) blocks[i].combine(blocks[i + 1]);
      merged.push_back(std::move(blocks[i]));
    }
    blocks = std::move(merged);
  }
  const detail::BlockSums& total = blocks.front();

  EmpiricalMoments result{group, k, seed, samples, {}, total.hist_re, total.hist_im};
  const double n = static_cast<double>(samples);
  result.moments.reserve(width);
  for (int r = 0; r <= r_max; ++r)
    for (int s = 0; s <= s_max; ++s) {
      const std::size_t idx = static_cast<std::size_t>(r) * (s_max + 1) + s;
      const std::complex<double> mean(total.re[idx] / n, total.im[idx] / n);
      double se = 0.0;
      if (samples > 1) {
        double variance = (total.abs2[idx] - n * std::norm(mean)) / (n - 1.0);
        se = std::sqrt(std::max(0.0, variance) / n);
      }
      result.moments.push_back({r, s, mean, se});
    }
  return result;
}

}  // namespace ctm
