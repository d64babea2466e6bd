#pragma once

// Work-split driver: runs the face stream as independent tasks (one per
// leading facet plus a continuation) and merges the results. Tasks run
// under OpenMP when the library was built with it, serially otherwise;
// either way the merged output is deterministic and matches a plain
// serial enumeration record for record.

#include "facelatt/analysis.hpp"
#include "facelatt/iterator.hpp"
#include "facelatt/lattice_input.hpp"

#include <vector>

namespace facelatt {

struct ParallelRun {
    // faces per depth in the original lattice (top record excluded)
    std::vector<long long> depth_counts;
    long long total_faces = 0;  // including the top record
    int top_count = 0;
    long long phi_total = 0;    // summed call counts across all tasks
    int max_depth = 0;          // deepest descent attempt, original depths
    bool has_empty = false;
    // serial emission order: top, facet 1, its subtree, facet 2, ...
    // filled only when collect_records was requested
    std::vector<FaceRecord> records;
};

ParallelRun run_parallel(const LatticeInput& input, int max_tasks,
                         bool collect_records = false);

FVector f_vector_parallel(const LatticeInput& input, int max_tasks);

} // namespace facelatt
