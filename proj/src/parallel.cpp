#include "facelatt/parallel.hpp"

#include "facelatt/errors.hpp"

#include <algorithm>
#include <exception>

namespace facelatt {

namespace {

struct TaskResult {
    std::vector<long long> depth_counts;
    long long faces = 0;
    long long phi = 0;
    int max_depth = 0;
    int tops = 0;
    bool has_empty = false;
    std::vector<FaceRecord> records;
};

// Drain one prepared task. `shift` moves the task's depths into the
// original lattice: +1 for branch tasks (their coatoms are the children
// of the facet the driver already emitted), 0 for the continuation and
// for an unsplit input.
TaskResult drain(const LatticeInput& task, int shift, bool collect_records) {
    TaskResult r;
    FaceStream fs(task, /*check=*/false);
    while (fs.advance()) {
        ++r.faces;
        if (fs.current_is_top()) {
            ++r.tops;
            if (collect_records) r.records.push_back(fs.current_record());
            continue;
        }
        const size_t d = static_cast<size_t>(fs.current_depth() + shift);
        if (r.depth_counts.size() <= d) r.depth_counts.resize(d + 1, 0);
        ++r.depth_counts[d];
        if (fs.current_count() == 0) r.has_empty = true;
        if (collect_records) {
            FaceRecord rec = fs.current_record();
            rec.depth += shift;
            r.records.push_back(std::move(rec));
        }
    }
    r.phi = fs.stats().phi;
    // a branch task's whole run sits one level down, including the initial
    // call that stands in for the descent attempt the driver skipped
    r.max_depth = fs.stats().max_depth + shift;
    return r;
}

void bump(std::vector<long long>& into, const std::vector<long long>& from) {
    if (into.size() < from.size()) into.resize(from.size(), 0);
    for (size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

} // namespace

ParallelRun run_parallel(const LatticeInput& input, int max_tasks, bool collect_records) {
    {
        ValidationReport rep = validate(input);
        if (!rep.ok()) throw InputError(rep.to_string());
    }
    const SplitDetail det = split_work_detail(input, max_tasks);
    const int n_tasks = static_cast<int>(det.tasks.size());
    const int n_branch = static_cast<int>(det.driver_facets.size());
    const bool split = n_branch > 0;

    std::vector<TaskResult> results(static_cast<size_t>(n_tasks));
    std::exception_ptr failure;
#ifdef FACELATT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int t = 0; t < n_tasks; ++t) {
        try {
            results[static_cast<size_t>(t)] =
                drain(det.tasks[static_cast<size_t>(t)], t < n_branch ? 1 : 0, collect_records);
        } catch (...) {
#ifdef FACELATT_HAVE_OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    ParallelRun out;
    if (split && emits_top_record(input)) {
        out.top_count = 1;
        ++out.total_faces;
        if (collect_records) out.records.push_back({input.top_face(), 0, true});
    }
    for (int t = 0; t < n_tasks; ++t) {
        if (t < n_branch) {
            // the facet this branch hangs from; emitted by the driver
            // under the same rule the stream applies to any head
            const AtomSet& a = det.driver_facets[static_cast<size_t>(t)];
            if ((a & input.ignored_atoms).empty()) {
                if (out.depth_counts.empty()) out.depth_counts.resize(1, 0);
                ++out.depth_counts[0];
                ++out.total_faces;
                if (a.count() == 0) out.has_empty = true;
                if (collect_records) out.records.push_back({a, 0, false});
            }
        }
        TaskResult& r = results[static_cast<size_t>(t)];
        bump(out.depth_counts, r.depth_counts);
        out.total_faces += r.faces;
        out.top_count += r.tops;
        out.phi_total += r.phi;
        out.max_depth = std::max(out.max_depth, r.max_depth);
        out.has_empty = out.has_empty || r.has_empty;
        if (collect_records)
            out.records.insert(out.records.end(),
                               std::make_move_iterator(r.records.begin()),
                               std::make_move_iterator(r.records.end()));
    }
    return out;
}

FVector f_vector_parallel(const LatticeInput& input, int max_tasks) {
    ParallelRun run = run_parallel(input, max_tasks, false);
    FVector f;
    f.by_depth = std::move(run.depth_counts);
    f.has_top = run.top_count > 0;
    f.has_empty = run.has_empty;
    return f;
}

} // namespace facelatt
