#ifndef TWOSIG_PARALLEL_HPP
#define TWOSIG_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace twosig {

/// Runs body(i) for i in [0, n) on up to `threads` worker threads
/// (0 = hardware concurrency). The first exception thrown by any call is
/// rethrown on the calling thread after all workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace twosig

#endif  // TWOSIG_PARALLEL_HPP
