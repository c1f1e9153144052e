#ifndef GH_PARALLEL_HPP
#define GH_PARALLEL_HPP

#include <thread>
#include <vector>

#include "common.hpp"

namespace gh {

inline int effective_workers(int requested) {
  if (requested <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
  }
  return requested;
}

// Runs fn(block, begin, end) over [0, total) split into contiguous blocks,
// one per worker.  Results are whatever fn writes into its own block slot;
// callers merge in block order, which keeps output independent of timing.
template <typename Fn>
void parallel_blocks(u64 total, int workers, Fn&& fn) {
  workers = effective_workers(workers);
  u64 nblocks = std::min<u64>(u64(workers), total ? total : 1);
  if (nblocks <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(nblocks);
  u64 chunk = total / nblocks, rem = total % nblocks;
  u64 begin = 0;
  std::exception_ptr err;
  std::mutex err_mu;
  for (u64 b = 0; b < nblocks; ++b) {
    u64 len = chunk + (b < rem ? 1 : 0);
    u64 end = begin + len;
    threads.emplace_back([&, b, begin, end] {
      try {
        fn(int(b), begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace gh

#endif
