#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "evosort/pool.hpp"

namespace evosort {

// Primary/scratch pair shared by the merge and radix kernels. primary holds
// the data; scratch is the same length and serves as merge destination and
// radix scatter target.
template <typename T>
struct SortBuffer {
  std::vector<T> primary;
  std::vector<T> scratch;

  SortBuffer() = default;
  explicit SortBuffer(std::vector<T> data)
      : primary(std::move(data)), scratch(primary.size()) {}
  explicit SortBuffer(std::size_t n) : primary(n), scratch(n) {}
};

// ---------------------------------------------------------------------------
// Insertion sort (stable, in place)
// ---------------------------------------------------------------------------

template <typename T>
void insertion_sort(std::span<T> a) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    T v = std::move(a[i]);
    std::size_t j = i;
    while (j > 0 && v < a[j - 1]) {
      a[j] = std::move(a[j - 1]);
      --j;
    }
    a[j] = std::move(v);
  }
}

// ---------------------------------------------------------------------------
// Tiled two-run merge
// ---------------------------------------------------------------------------

// Co-rank split for output position k: returns (i, j) with i + j = k such
// that merging left[i..] with right[j..] continues the stable merge (equal
// elements from left come first).
template <typename T>
std::pair<std::size_t, std::size_t> merge_split(std::span<const T> left,
                                                std::span<const T> right,
                                                std::size_t k) {
  const std::size_t nl = left.size();
  const std::size_t nr = right.size();
  std::size_t lo = k > nr ? k - nr : 0;
  std::size_t hi = std::min(k, nl);
  while (lo < hi) {
    const std::size_t i = lo + (hi - lo) / 2;
    const std::size_t j = k - i;
    if (i < nl && j > 0 && !(right[j - 1] < left[i])) {
      // right[j-1] would be emitted after left[i]: split is too far left
      lo = i + 1;
    } else if (i > 0 && j < nr && right[j] < left[i - 1]) {
      hi = i - 1;
    } else {
      lo = hi = i;
    }
  }
  return {lo, k - lo};
}

// Produces dest[k, k + len) of the stable merge of left and right.
template <typename T>
void merge_tile(std::span<const T> left, std::span<const T> right,
                std::span<T> dest, std::size_t k, std::size_t len) {
  auto [i, j] = merge_split(left, right, k);
  std::size_t out = k;
  const std::size_t end = k + len;
  while (out < end && i < left.size() && j < right.size()) {
    if (right[j] < left[i]) {
      dest[out++] = right[j++];
    } else {
      dest[out++] = left[i++];
    }
  }
  while (out < end && i < left.size()) dest[out++] = left[i++];
  while (out < end && j < right.size()) dest[out++] = right[j++];
}

// Full stable merge of two sorted runs into dest, produced tile by tile.
// Each tile locates its own source sub-ranges, so tiles are independent.
template <typename T>
void merge_tiled(std::span<const T> left, std::span<const T> right,
                 std::span<T> dest, std::size_t tile_size) {
  const std::size_t total = left.size() + right.size();
  if (tile_size < 1) tile_size = 1;
  for (std::size_t k = 0; k < total; k += tile_size) {
    merge_tile(left, right, dest, k, std::min(tile_size, total - k));
  }
}

// ---------------------------------------------------------------------------
// Refined bottom-up parallel mergesort
// ---------------------------------------------------------------------------

namespace detail {

template <typename T>
struct MergeTask {
  const T* left;
  std::size_t left_len;
  const T* right;  // nullptr: plain copy of left into dest
  std::size_t right_len;
  T* dest;
  std::size_t tile_begin;
  std::size_t tile_len;
};

template <typename T>
void run_merge_task(const MergeTask<T>& t, std::size_t tile_size) {
  if (t.right == nullptr) {
    std::copy(t.left, t.left + t.left_len, t.dest);
    return;
  }
  std::span<const T> left(t.left, t.left_len);
  std::span<const T> right(t.right, t.right_len);
  std::span<T> dest(t.dest, t.left_len + t.right_len);
  if (t.tile_len == left.size() + right.size() && t.tile_begin == 0) {
    merge_tiled(left, right, dest, tile_size);
  } else {
    merge_tile(left, right, dest, t.tile_begin, t.tile_len);
  }
}

}  // namespace detail

// Bottom-up mergesort: insertion-sort base chunks of chunk_size in parallel,
// then double the run length each level, merging adjacent runs through the
// tiled kernel. Levels whose run length is below parallel_merge_threshold
// merge each pair as a single task; larger runs split into per-tile tasks.
template <typename T>
void refined_parallel_mergesort(std::span<T> primary, std::span<T> scratch,
                                std::size_t chunk_size,
                                std::size_t parallel_merge_threshold,
                                std::size_t tile_size, WorkerPool& pool) {
  const std::size_t n = primary.size();
  if (n <= 1) return;
  if (chunk_size < 1) chunk_size = 1;
  if (tile_size < 1) tile_size = 1;

  const std::size_t chunk_count = (n + chunk_size - 1) / chunk_size;
  pool.run(chunk_count, [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    const std::size_t end = std::min(begin + chunk_size, n);
    insertion_sort(primary.subspan(begin, end - begin));
  });

  T* src = primary.data();
  T* dst = scratch.data();
  std::vector<detail::MergeTask<T>> tasks;
  for (std::size_t curr = chunk_size; curr < n; curr *= 2) {
    tasks.clear();
    for (std::size_t p = 0; p < n; p += 2 * curr) {
      const std::size_t left_len = std::min(curr, n - p);
      const std::size_t right_len = std::min(curr, n - p - left_len);
      if (right_len == 0) {
        tasks.push_back({src + p, left_len, nullptr, 0, dst + p, 0, left_len});
        continue;
      }
      const std::size_t total = left_len + right_len;
      if (curr < parallel_merge_threshold || total <= tile_size) {
        tasks.push_back(
            {src + p, left_len, src + p + left_len, right_len, dst + p, 0, total});
      } else {
        for (std::size_t k = 0; k < total; k += tile_size) {
          tasks.push_back({src + p, left_len, src + p + left_len, right_len,
                           dst + p, k, std::min(tile_size, total - k)});
        }
      }
    }
    pool.run(tasks.size(), [&](std::size_t i) {
      detail::run_merge_task(tasks[i], tile_size);
    });
    std::swap(src, dst);
  }

  if (src != primary.data()) {
    std::copy(src, src + n, primary.data());
  }
}

// ---------------------------------------------------------------------------
// Block-based signed LSD radix sort
// ---------------------------------------------------------------------------

template <typename T>
concept RadixElement = std::same_as<T, std::int32_t> || std::same_as<T, std::int64_t>;

// Sign-bit flip maps signed order onto unsigned order; applying it twice is
// the identity.
template <RadixElement T>
constexpr std::make_unsigned_t<T> sign_mask_of() {
  using U = std::make_unsigned_t<T>;
  return U{1} << (sizeof(T) * 8 - 1);
}

template <RadixElement T>
constexpr std::make_unsigned_t<T> sign_flip(T v) {
  using U = std::make_unsigned_t<T>;
  return static_cast<U>(v) ^ sign_mask_of<T>();
}

template <RadixElement T>
constexpr T sign_unflip(std::make_unsigned_t<T> u) {
  return static_cast<T>(u ^ sign_mask_of<T>());
}

struct RadixPassPlan {
  int pass_count;      // 4 for 32-bit elements, 8 for 64-bit
  int bits_per_pass;   // 8
  std::uint64_t sign_mask;
  std::vector<std::pair<std::size_t, std::size_t>> thread_chunks;  // disjoint, covering [0, n)
};

template <RadixElement T>
RadixPassPlan make_radix_plan(std::size_t n, unsigned worker_count) {
  if (worker_count < 1) worker_count = 1;
  RadixPassPlan plan;
  plan.pass_count = static_cast<int>(sizeof(T));
  plan.bits_per_pass = 8;
  plan.sign_mask = static_cast<std::uint64_t>(sign_mask_of<T>());
  const std::size_t per_worker = (n + worker_count - 1) / worker_count;
  for (std::size_t begin = 0; begin < n; begin += per_worker) {
    plan.thread_chunks.emplace_back(begin, std::min(begin + per_worker, n));
  }
  if (plan.thread_chunks.empty()) plan.thread_chunks.emplace_back(0, 0);
  return plan;
}

// LSD radix sort on the sign-flipped keys. Per pass: thread-local 256-bin
// histograms, one global exclusive prefix sum, per-worker write offsets
// (bin start + earlier workers' counts in that bin), then a stable scatter
// into scratch and a buffer swap. The even pass count lands the result back
// in primary before the final sign restore.
template <RadixElement T>
void radix_sort_signed(std::span<T> primary, std::span<T> scratch,
                       const RadixPassPlan& plan, WorkerPool& pool) {
  using U = std::make_unsigned_t<T>;
  const std::size_t n = primary.size();
  if (n <= 1) return;

  // Signed and unsigned variants of the same type may alias.
  U* a = reinterpret_cast<U*>(primary.data());
  U* b = reinterpret_cast<U*>(scratch.data());
  const U mask = sign_mask_of<T>();
  const auto& chunks = plan.thread_chunks;
  const std::size_t workers = chunks.size();

  pool.run(workers, [&](std::size_t w) {
    for (std::size_t i = chunks[w].first; i < chunks[w].second; ++i) a[i] ^= mask;
  });

  constexpr std::size_t kBins = 256;
  std::vector<std::array<std::uint64_t, kBins>> local(workers);
  std::array<std::uint64_t, kBins> offsets{};

  for (int pass = 0; pass < plan.pass_count; ++pass) {
    const int shift = plan.bits_per_pass * pass;

    pool.run(workers, [&](std::size_t w) {
      auto& hist = local[w];
      hist.fill(0);
      for (std::size_t i = chunks[w].first; i < chunks[w].second; ++i) {
        ++hist[(a[i] >> shift) & 0xFF];
      }
    });

    // Exclusive prefix sum over the global histogram, then thread-wise write
    // offsets: each worker starts after earlier workers' counts for the bin.
    std::uint64_t run = 0;
    for (std::size_t bin = 0; bin < kBins; ++bin) {
      offsets[bin] = run;
      for (std::size_t w = 0; w < workers; ++w) run += local[w][bin];
    }
    for (std::size_t bin = 0; bin < kBins; ++bin) {
      std::uint64_t at = offsets[bin];
      for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t count = local[w][bin];
        local[w][bin] = at;
        at += count;
      }
    }

    pool.run(workers, [&](std::size_t w) {
      auto& write = local[w];
      for (std::size_t i = chunks[w].first; i < chunks[w].second; ++i) {
        b[write[(a[i] >> shift) & 0xFF]++] = a[i];
      }
    });

    std::swap(a, b);
  }

  pool.run(workers, [&](std::size_t w) {
    for (std::size_t i = chunks[w].first; i < chunks[w].second; ++i) a[i] ^= mask;
  });
}

template <RadixElement T>
void radix_sort_signed(std::span<T> primary, std::span<T> scratch,
                       WorkerPool& pool) {
  radix_sort_signed(primary, scratch, make_radix_plan<T>(primary.size(), pool.size()),
                    pool);
}

}  // namespace evosort
