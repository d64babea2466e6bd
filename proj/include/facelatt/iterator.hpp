#pragma once

// Depth-first iteration over all faces of a finite locally branched lattice,
// given only the coatom list. Faces are emitted exactly once, as atom sets,
// in the order a recursive descent visits them: take the head coatom, emit
// it, recurse into the sublattice strictly below it (its lower covers are
// the inclusion-maximal intersections with the remaining list entries, minus
// anything under an ignored set), then continue with the remaining coatoms
// treating the head as ignored from now on.
//
// Two implementations live here. FaceStream is the engine: an explicit frame
// stack with per-depth arenas, word-index lists restricted to the support of
// the current face, and ignored lists reduced to inclusion-maximals of their
// intersection with that support. face_iterator_reference is a line-by-line
// transcription of the recursive procedure using plain AtomSet vectors; it
// is deliberately unoptimized and serves as the comparison baseline in tests
// and benchmarks.

#include "facelatt/lattice_input.hpp"

#include <cstdint>
#include <vector>

namespace facelatt {

struct FaceRecord {
    AtomSet atoms;
    int depth = 0;        // number of nested descents at emission; 0 for coatoms
    bool is_top = false;  // artificial top emitted ahead of the iteration
};

struct IterStats {
    int n = 0;             // atom capacity
    int m = 0;             // initial coatom count
    long long alpha = 0;   // sum of |a ∪ ignored_atoms| over coatoms and ignored sets
    long long phi = 0;     // frames entered: initial call plus one per attempted descent
    int max_depth = 0;     // deepest attempted call (empty descents count)
};

/// Inclusion-maximal elements, duplicates removed, surviving elements in
/// their original relative order. [{1},{1,2},{2}] -> [{1,2}].
std::vector<AtomSet> inclusion_maximals(const std::vector<AtomSet>& sets);

/// Whether iterating `in` emits the artificial top record: asked for, there
/// is something for it to sit above, and the top value itself passes the
/// ignore filters (relevant when chained complex cells swallow a later top).
bool emits_top_record(const LatticeInput& in);

/// Pull-based face stream. Construction copies the input; advance() moves to
/// the next face and returns false when the iteration is exhausted. The
/// current face is materialized on demand, so counting passes never copy.
class FaceStream {
public:
    /// check=true runs validate() and throws InputError on a broken contract.
    explicit FaceStream(LatticeInput input, bool check = true);

    bool advance();

    int current_depth() const { return cur_depth_; }
    bool current_is_top() const { return cur_is_top_; }
    int current_count() const;  // |face| without materializing
    AtomSet current_face() const;
    FaceRecord current_record() const { return {current_face(), cur_depth_, cur_is_top_}; }

    const IterStats& stats() const { return stats_; }
    int peak_live_frames() const { return peak_frames_; }

private:
    enum Phase : uint8_t { kHead, kBuild, kAfterChild };

    struct Level {
        std::vector<uint64_t> list;   // coatom slots, stride W
        std::vector<uint64_t> view;   // ignored slots (reduced), stride W
        std::vector<int> widx;        // word indices with support at this frame
        std::vector<int> pc;          // scratch: popcounts for maximality
        std::vector<int> ord;         // scratch: index order
        std::vector<uint8_t> keep;    // scratch: survivor flags
        std::vector<int> accepted;    // scratch: accepted indices
        int begin = 0;
        int end = 0;
        int nview = 0;
        Phase phase = kHead;
    };

    uint64_t* slot(std::vector<uint64_t>& buf, int i) { return buf.data() + static_cast<size_t>(i) * W_; }
    const uint64_t* slot(const std::vector<uint64_t>& buf, int i) const {
        return buf.data() + static_cast<size_t>(i) * W_;
    }
    bool subset_on(const uint64_t* x, const uint64_t* y, const std::vector<int>& widx) const;
    int maximals_compact(Level& lv, std::vector<uint64_t>& buf, int count,
                         const std::vector<int>& widx);
    void build_child();
    void after_child();
    Level& ensure_level(int d);

    size_t W_ = 0;
    int n_ = 0;
    std::vector<uint64_t> ia_;       // ignored_atoms words
    std::vector<uint64_t> top_;      // artificial top words (valid if have_top_)
    std::vector<uint64_t> scratch_;  // one set: materialization / pending union
    bool have_top_ = false;
    bool top_pending_ = false;
    bool done_ = false;

    std::vector<Level> levels_;
    int depth_ = -1;

    // current emission
    int cur_depth_ = 0;
    bool cur_is_top_ = false;
    const uint64_t* cur_words_ = nullptr;
    const std::vector<int>* cur_widx_ = nullptr;  // null = full width

    IterStats stats_;
    int peak_frames_ = 0;
};

/// Convenience: run the stream to completion, returning all records.
std::vector<FaceRecord> collect_faces(const LatticeInput& input, IterStats* stats = nullptr);

/// Pseudocode-faithful serial implementation (reference baseline). Same
/// emission order, records and stats as FaceStream.
std::vector<FaceRecord> face_iterator_reference(const LatticeInput& input,
                                                IterStats* stats = nullptr);

/// Decompose an iteration into at most max_tasks independent inputs: the
/// branch inputs of the first k-1 coatoms plus the continuation after them
/// (the last task). Branch inputs emit the faces strictly below their facet;
/// the driver is responsible for the artificial top and the first k-1 facet
/// emissions. max_tasks <= 1 returns the input unchanged.
std::vector<LatticeInput> split_work(const LatticeInput& input, int max_tasks);

/// split_work plus the facets the driver must emit (the first k-1 processed
/// coatoms, in order). All returned inputs have emit_top = false except the
/// k = 1 identity case.
struct SplitDetail {
    std::vector<LatticeInput> tasks;
    std::vector<AtomSet> driver_facets;
};
SplitDetail split_work_detail(const LatticeInput& input, int max_tasks);

} // namespace facelatt
