#ifndef ENTCERT_PARALLEL_HPP
#define ENTCERT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace entcert {

/// Worker count: ENTCERT_THREADS when set (>= 1), else hardware concurrency.
std::size_t worker_count();

/// Runs fn(0..count-1) over a small thread pool. All certificate evaluations
/// are pure, so tasks must not share mutable state beyond their own slot.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace entcert

#endif
