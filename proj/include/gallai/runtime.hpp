#pragma once

namespace gallai {

/// Number of worker threads internal scans may use: the GALLAI_THREADS
/// environment variable when set (>= 1), otherwise the hardware
/// concurrency clamped to [1, 8]. Parallel scans aggregate
/// deterministically, so results never depend on this value.
int thread_cap();

}  // namespace gallai
