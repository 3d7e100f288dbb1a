#pragma once

#include <cstddef>
#include <functional>

namespace warpcurv {

/// Worker threads to use: hardware concurrency, capped by WARPCURV_THREADS.
std::size_t worker_count();

/// Runs body(block) for block in [0, blocks) across worker threads. Blocks
/// are claimed dynamically; callers must make each block's work depend only
/// on its index.
void parallel_blocks(std::size_t blocks, const std::function<void(std::size_t)>& body);

}  // namespace warpcurv
