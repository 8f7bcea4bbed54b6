#pragma once

#include <cstddef>
#include <functional>

namespace circlecheb {

/// Worker count: hardware concurrency, capped by CIRCLE_CHEB_THREADS when set.
std::size_t worker_count();

/// Calls body(i) for i in [0, count) across worker_count() threads. Each index
/// runs exactly once; callers write results into slot i and fold them in index
/// order afterwards, so output does not depend on scheduling. The first
/// exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace circlecheb
