#pragma once

#include <cstdint>

namespace apfree {

// Runtime budgets and thread count for the search/grid kernels.
//
// Defaults come from the environment on first use:
//   APFREE_NODE_BUDGET  - max search nodes / scanned pairs (default 1e9)
//   APFREE_DEPTH_BUDGET - max grid depth in bits (default 24; product
//                         grids are capped at half of it)
//   APFREE_THREADS      - worker threads (default: OpenMP's choice)
//
// threads == 0 means "use the OpenMP default"; threads == 1 forces the
// serial reference path.
struct ExecOptions {
    std::uint64_t node_budget = default_node_budget();
    std::uint32_t depth_budget = default_depth_budget();
    int threads = default_threads();

    static std::uint64_t default_node_budget();
    static std::uint32_t default_depth_budget();
    static int default_threads();
};

// Number of threads a parallel kernel will actually use for `opts`.
int resolved_threads(const ExecOptions& opts);

}  // namespace apfree
