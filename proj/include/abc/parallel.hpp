#pragma once

#include <functional>

namespace abc {

// ABC_THREADS env var, else hardware concurrency.
int default_thread_count();

// Runs fn(chunk) for chunk = 0..num_chunks-1 on up to `threads` workers.
// Chunks are claimed atomically; callers combine per-chunk results in chunk
// order, which keeps every reduction independent of the worker count.
void parallel_chunks(int num_chunks, int threads, const std::function<void(int)>& fn);

}  // namespace abc
