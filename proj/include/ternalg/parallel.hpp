#pragma once

#include <cstddef>
#include <functional>

namespace ternalg {

/// Worker count: hardware concurrency, capped by TERNALG_THREADS when set.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// visited exactly once; body must only touch state owned by that index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ternalg
