#pragma once

#include <cstddef>
#include <functional>

namespace inls {

/// Worker count for pointwise kernels; bounded by INLS_LAB_THREADS when set.
int thread_count();

/// Applies fn to disjoint chunks [begin, end) covering [0, n). Runs inline
/// when n is small or only one worker is available.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace inls
