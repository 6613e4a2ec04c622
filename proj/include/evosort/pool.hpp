#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace evosort {

// Fixed-size worker pool for the parallel phases of the sorting kernels.
// run() hands out task indices [0, count) to the workers; the calling thread
// participates, so a pool of size 1 spawns no threads and runs inline.
class WorkerPool {
public:
  explicit WorkerPool(unsigned workers = 0) {
    if (workers == 0) workers = default_workers();
    size_ = workers;
    threads_.reserve(size_ - 1);
    for (unsigned i = 1; i < size_; ++i) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  ~WorkerPool() {
    {
      std::unique_lock lock(mutex_);
      stopping_ = true;
      ++epoch_;
    }
    wake_.notify_all();
    for (auto& t : threads_) t.join();
  }

  unsigned size() const { return size_; }

  // Blocks until task(i) has run for every i in [0, count).
  void run(std::size_t count, const std::function<void(std::size_t)>& task) {
    if (count == 0) return;
    if (size_ == 1 || count == 1) {
      for (std::size_t i = 0; i < count; ++i) task(i);
      return;
    }
    {
      std::unique_lock lock(mutex_);
      task_ = &task;
      total_ = count;
      next_.store(0, std::memory_order_relaxed);
      remaining_.store(count, std::memory_order_relaxed);
      ++epoch_;
    }
    wake_.notify_all();
    drain(task, count);
    // Wait until every task ran and no worker is still inside this job's
    // drain loop; only then is it safe to reuse the shared counters.
    std::unique_lock lock(mutex_);
    done_.wait(lock, [this] {
      return remaining_.load(std::memory_order_acquire) == 0 && active_ == 0;
    });
    task_ = nullptr;
  }

  // EVOSORT_WORKERS overrides detected hardware parallelism.
  static unsigned default_workers() {
    if (const char* env = std::getenv("EVOSORT_WORKERS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
  }

private:
  void drain(const std::function<void(std::size_t)>& task, std::size_t total) {
    while (true) {
      const std::size_t i = next_.fetch_add(1, std::memory_order_relaxed);
      if (i >= total) break;
      task(i);
      if (remaining_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
        std::unique_lock lock(mutex_);
        done_.notify_all();
      }
    }
  }

  void worker_loop() {
    std::uint64_t seen = 0;
    while (true) {
      const std::function<void(std::size_t)>* job = nullptr;
      std::size_t total = 0;
      {
        std::unique_lock lock(mutex_);
        wake_.wait(lock, [&] { return epoch_ != seen; });
        seen = epoch_;
        if (stopping_) return;
        if (task_ != nullptr) {
          job = task_;
          total = total_;
          ++active_;
        }
      }
      if (job != nullptr) {
        drain(*job, total);
        std::unique_lock lock(mutex_);
        if (--active_ == 0) done_.notify_all();
      }
    }
  }

  unsigned size_ = 1;
  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const std::function<void(std::size_t)>* task_ = nullptr;
  std::size_t total_ = 0;
  std::atomic<std::size_t> next_{0};
  std::atomic<std::size_t> remaining_{0};
  unsigned active_ = 0;
  std::uint64_t epoch_ = 0;
  bool stopping_ = false;
};

}  // namespace evosort
