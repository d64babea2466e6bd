#include "facelatt/iterator.hpp"

#include "facelatt/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace facelatt {

namespace {

long long incidence_length(const LatticeInput& in) {
    long long alpha = 0;
    for (const AtomSet& a : in.coatoms) alpha += (a | in.ignored_atoms).count();
    for (const AtomSet& y : in.ignored_sets) alpha += (y | in.ignored_atoms).count();
    return alpha;
}

} // namespace

// The artificial top is emitted only when there is something to sit above
// (or a designated top pins the value explicitly), and it obeys the same
// ignore filters as every other emission — a chained complex cell whose top
// lies inside an earlier cell must contribute nothing.
bool emits_top_record(const LatticeInput& in) {
    if (!in.emit_top || (in.coatoms.empty() && !in.top.has_value())) return false;
    const AtomSet t = in.top_face();
    if (!(t & in.ignored_atoms).empty()) return false;
    return !t.is_subset_of_any(in.ignored_sets);
}

std::vector<AtomSet> inclusion_maximals(const std::vector<AtomSet>& sets) {
    std::vector<AtomSet> out;
    out.reserve(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < sets.size() && !dominated; ++j) {
            if (j == i) continue;
            if (!sets[i].is_subset_of(sets[j])) continue;
            // strict superset kills i; an equal twin survives only once
            if (!sets[j].is_subset_of(sets[i]) || j < i) dominated = true;
        }
        if (!dominated) out.push_back(sets[i]);
    }
    return out;
}

FaceStream::FaceStream(LatticeInput input, bool check) {
    if (check) {
        ValidationReport rep = validate(input);
        if (!rep.ok()) throw InputError("invalid iteration input:\n" + rep.to_string());
    }
    n_ = input.n_atoms;
    W_ = std::max<size_t>(AtomSet::words_for(n_), 1);
    stats_.n = n_;
    stats_.m = static_cast<int>(input.coatoms.size());
    stats_.alpha = incidence_length(input);
    stats_.phi = 1;  // the initial invocation

    ia_.assign(W_, 0);
    std::span<const uint64_t> iw = input.ignored_atoms.words();
    std::copy(iw.begin(), iw.end(), ia_.begin());
    scratch_.assign(W_, 0);

    if (emits_top_record(input)) {
        AtomSet t = input.top_face();
        top_.assign(W_, 0);
        std::span<const uint64_t> tw = t.words();
        std::copy(tw.begin(), tw.end(), top_.begin());
        have_top_ = top_pending_ = true;
    }

    const int m = stats_.m;
    // depth can grow only while both the list and the face shrink strictly
    levels_.reserve(static_cast<size_t>(std::min(n_, m)) + 3);
    Level& root = ensure_level(0);
    root.list.assign(static_cast<size_t>(std::max(m, 1)) * W_, 0);
    for (int i = 0; i < m; ++i) {
        std::span<const uint64_t> cw = input.coatoms[static_cast<size_t>(i)].words();
        std::copy(cw.begin(), cw.end(), slot(root.list, i));
    }
    root.widx.resize(W_);
    std::iota(root.widx.begin(), root.widx.end(), 0);

    std::vector<AtomSet> view0 = inclusion_maximals(input.ignored_sets);
    root.view.assign((view0.size() + static_cast<size_t>(m) + 1) * W_, 0);
    for (size_t i = 0; i < view0.size(); ++i) {
        std::span<const uint64_t> vw = view0[i].words();
        std::copy(vw.begin(), vw.end(), slot(root.view, static_cast<int>(i)));
    }
    root.nview = static_cast<int>(view0.size());
    root.begin = 0;
    root.end = m;
    root.phase = kHead;
    depth_ = 0;
    peak_frames_ = 1;
}

FaceStream::Level& FaceStream::ensure_level(int d) {
    while (levels_.size() <= static_cast<size_t>(d)) levels_.emplace_back();
    return levels_[static_cast<size_t>(d)];
}

bool FaceStream::subset_on(const uint64_t* x, const uint64_t* y,
                           const std::vector<int>& widx) const {
    for (int k : widx)
        if (x[k] & ~y[k]) return false;
    return true;
}

int FaceStream::maximals_compact(Level& lv, std::vector<uint64_t>& buf, int count,
                                 const std::vector<int>& widx) {
    if (count <= 1) return count;
    lv.pc.assign(static_cast<size_t>(count), 0);
    lv.ord.resize(static_cast<size_t>(count));
    lv.keep.assign(static_cast<size_t>(count), 0);
    lv.accepted.clear();
    for (int i = 0; i < count; ++i) {
        const uint64_t* x = slot(buf, i);
        int c = 0;
        for (int k : widx) c += std::popcount(x[k]);
        lv.pc[static_cast<size_t>(i)] = c;
    }
    std::iota(lv.ord.begin(), lv.ord.end(), 0);
    std::stable_sort(lv.ord.begin(), lv.ord.end(),
                     [&](int a, int b) { return lv.pc[static_cast<size_t>(a)] > lv.pc[static_cast<size_t>(b)]; });
    // Scanning by falling popcount, any dominator of the current set is
    // already in `accepted` (dominators are strictly bigger, and domination
    // is transitive through dropped sets). Equal twins: the first stays.
    for (int oi = 0; oi < count; ++oi) {
        int i = lv.ord[static_cast<size_t>(oi)];
        const uint64_t* x = slot(buf, i);
        bool dominated = false;
        for (int j : lv.accepted) {
            if (subset_on(x, slot(buf, j), widx)) { dominated = true; break; }
        }
        if (!dominated) {
            lv.keep[static_cast<size_t>(i)] = 1;
            lv.accepted.push_back(i);
        }
    }
    int w = 0;
    for (int r = 0; r < count; ++r) {
        if (!lv.keep[static_cast<size_t>(r)]) continue;
        if (w != r) {
            uint64_t* d = slot(buf, w);
            const uint64_t* s = slot(buf, r);
            for (int k : widx) d[k] = s[k];
        }
        ++w;
    }
    return w;
}

void FaceStream::build_child() {
    // Attempted descents are counted whether or not anything survives; the
    // depth high-water mark follows the attempt, not the materialization.
    ++stats_.phi;
    if (depth_ + 1 > stats_.max_depth) stats_.max_depth = depth_ + 1;

    Level& C = ensure_level(depth_ + 1);
    Level& L = levels_[static_cast<size_t>(depth_)];  // re-fetch: ensure_level may reallocate
    const uint64_t* a = slot(L.list, L.begin);

    C.widx.clear();
    for (int k : L.widx)
        if (a[k]) C.widx.push_back(k);

    const int rest = L.end - L.begin - 1;
    if (rest <= 0) return;

    if (C.list.size() < static_cast<size_t>(rest) * W_)
        C.list.resize(static_cast<size_t>(rest) * W_);
    int nc = 0;
    for (int r = L.begin + 1; r < L.end; ++r) {
        const uint64_t* b = slot(L.list, r);
        uint64_t* x = slot(C.list, nc);
        for (int k : C.widx) x[k] = a[k] & b[k];
        ++nc;
    }

    // Maximality first: a candidate under a to-be-ignored set only ever
    // dominates candidates that are under it too, so thinning the list
    // before the ignored filter drops nothing that would have survived.
    nc = maximals_compact(C, C.list, nc, C.widx);

    // Ignored sets restricted to the head's support. Only their
    // intersection with the child face can ever swallow a candidate, and
    // after intersecting, containments open up; keep maximals only.
    const int vin = L.nview;
    const size_t need = (static_cast<size_t>(vin) + static_cast<size_t>(nc) + 1) * W_;
    if (C.view.size() < need) C.view.resize(need);
    int nv = 0;
    for (int i = 0; i < vin; ++i) {
        const uint64_t* y = slot(L.view, i);
        uint64_t* v = slot(C.view, nv);
        for (int k : C.widx) v[k] = y[k] & a[k];
        ++nv;
    }
    nv = maximals_compact(C, C.view, nv, C.widx);
    C.nview = nv;

    int w = 0;
    for (int r = 0; r < nc; ++r) {
        const uint64_t* x = slot(C.list, r);
        bool drop = false;
        for (int i = 0; i < nv && !drop; ++i)
            if (subset_on(x, slot(C.view, i), C.widx)) drop = true;
        if (drop) continue;
        if (w != r) {
            uint64_t* d = slot(C.list, w);
            const uint64_t* s = slot(C.list, r);
            for (int k : C.widx) d[k] = s[k];
        }
        ++w;
    }
    if (w == 0) return;  // attempted but empty: no frame materializes

    C.begin = 0;
    C.end = w;
    C.phase = kHead;
    ++depth_;
    if (depth_ + 1 > peak_frames_) peak_frames_ = depth_ + 1;
}

void FaceStream::after_child() {
    Level& L = levels_[static_cast<size_t>(depth_)];
    const uint64_t* a = slot(L.list, L.begin);

    // u = head ∪ ignored_atoms; everything at or below it is spoken for
    uint64_t* u = scratch_.data();
    for (int k : L.widx) u[k] = a[k] | ia_[k];

    // entries swallowed by u are redundant in the view
    int w = 0;
    for (int i = 0; i < L.nview; ++i) {
        const uint64_t* v = slot(L.view, i);
        if (subset_on(v, u, L.widx)) continue;
        if (w != i) {
            uint64_t* d = slot(L.view, w);
            for (int k : L.widx) d[k] = v[k];
        }
        ++w;
    }
    if (L.view.size() < static_cast<size_t>(w + 1) * W_)
        L.view.resize(static_cast<size_t>(w + 1) * W_);
    {
        uint64_t* d = slot(L.view, w);
        for (int k : L.widx) d[k] = u[k];
    }
    L.nview = w + 1;

    // drop list entries now under u; the head itself is consumed
    int lw = L.begin;
    for (int r = L.begin + 1; r < L.end; ++r) {
        const uint64_t* x = slot(L.list, r);
        if (subset_on(x, u, L.widx)) continue;
        if (lw != r) {
            uint64_t* d = slot(L.list, lw);
            for (int k : L.widx) d[k] = x[k];
        }
        ++lw;
    }
    L.end = lw;
}

bool FaceStream::advance() {
    if (done_) return false;
    if (top_pending_) {
        top_pending_ = false;
        cur_depth_ = 0;
        cur_is_top_ = true;
        cur_words_ = top_.data();
        cur_widx_ = nullptr;
        return true;
    }
    while (depth_ >= 0) {
        Level& L = levels_[static_cast<size_t>(depth_)];
        switch (L.phase) {
            case kHead: {
                if (L.begin >= L.end) {
                    --depth_;  // parent went kAfterChild before descending
                    break;
                }
                L.phase = kBuild;
                const uint64_t* a = slot(L.list, L.begin);
                bool meets_ignored = false;
                for (int k : L.widx)
                    if (a[k] & ia_[k]) { meets_ignored = true; break; }
                if (!meets_ignored) {
                    cur_depth_ = depth_;
                    cur_is_top_ = false;
                    cur_words_ = a;
                    cur_widx_ = &L.widx;
                    return true;
                }
                break;
            }
            case kBuild:
                L.phase = kAfterChild;
                build_child();
                break;
            case kAfterChild:
                after_child();
                L.phase = kHead;
                break;
        }
    }
    done_ = true;
    cur_words_ = nullptr;
    cur_widx_ = nullptr;
    return false;
}

int FaceStream::current_count() const {
    if (!cur_words_) throw InternalError("no current face");
    int c = 0;
    if (!cur_widx_) {
        for (size_t k = 0; k < W_; ++k) c += std::popcount(cur_words_[k]);
    } else {
        for (int k : *cur_widx_) c += std::popcount(cur_words_[k]);
    }
    return c;
}

AtomSet FaceStream::current_face() const {
    if (!cur_words_) throw InternalError("no current face to materialize");
    std::vector<uint64_t> buf(W_, 0);
    if (!cur_widx_) {
        std::copy(cur_words_, cur_words_ + W_, buf.begin());
    } else {
        for (int k : *cur_widx_) buf[static_cast<size_t>(k)] = cur_words_[k];
    }
    return atomset_from_words(n_, buf);
}

std::vector<FaceRecord> collect_faces(const LatticeInput& input, IterStats* stats) {
    FaceStream fs(input);
    std::vector<FaceRecord> out;
    while (fs.advance()) out.push_back(fs.current_record());
    if (stats) *stats = fs.stats();
    return out;
}

namespace {

// Direct transcription of the recursive procedure; coatoms and ignored_sets
// are taken by value because every call level owns fresh copies. The
// continuation after a head coatom stays in the same call (the recursion is
// a tail call), which keeps phi = one initial call + one per descent.
void reference_descend(std::vector<AtomSet> coatoms, std::vector<AtomSet> ignored_sets,
                       const AtomSet& ignored_atoms, int depth, std::vector<FaceRecord>& out,
                       IterStats& st) {
    while (!coatoms.empty()) {
        const AtomSet a = coatoms.front();
        if ((a & ignored_atoms).empty()) out.push_back({a, depth, false});

        std::vector<AtomSet> kept;
        for (size_t r = 1; r < coatoms.size(); ++r) {
            AtomSet x = a & coatoms[r];
            if (!x.is_subset_of_any(ignored_sets)) kept.push_back(std::move(x));
        }
        kept = inclusion_maximals(kept);
        ++st.phi;
        if (depth + 1 > st.max_depth) st.max_depth = depth + 1;
        if (!kept.empty())
            reference_descend(std::move(kept), ignored_sets, ignored_atoms, depth + 1, out, st);

        AtomSet u = a | ignored_atoms;
        std::vector<AtomSet> next;
        for (size_t r = 1; r < coatoms.size(); ++r)
            if (!coatoms[r].is_subset_of(u)) next.push_back(coatoms[r]);
        ignored_sets.push_back(std::move(u));
        coatoms = std::move(next);
    }
}

} // namespace

std::vector<FaceRecord> face_iterator_reference(const LatticeInput& input, IterStats* stats) {
    ValidationReport rep = validate(input);
    if (!rep.ok()) throw InputError("invalid iteration input:\n" + rep.to_string());

    IterStats st;
    st.n = input.n_atoms;
    st.m = static_cast<int>(input.coatoms.size());
    st.alpha = incidence_length(input);
    st.phi = 1;

    std::vector<FaceRecord> out;
    if (emits_top_record(input)) out.push_back({input.top_face(), 0, true});
    if (!input.coatoms.empty())
        reference_descend(input.coatoms, input.ignored_sets, input.ignored_atoms, 0, out, st);
    if (stats) *stats = st;
    return out;
}

SplitDetail split_work_detail(const LatticeInput& input, int max_tasks) {
    SplitDetail out;
    const size_t m = input.coatoms.size();
    if (max_tasks <= 1 || m <= 1) {
        out.tasks.push_back(input);
        return out;
    }
    const size_t k = std::min(static_cast<size_t>(max_tasks), m);

    std::vector<AtomSet> list = input.coatoms;
    std::vector<AtomSet> ignored = input.ignored_sets;
    for (size_t j = 0; j + 1 < k && !list.empty(); ++j) {
        const AtomSet a = list.front();
        out.driver_facets.push_back(a);

        std::vector<AtomSet> kept;
        for (size_t r = 1; r < list.size(); ++r) {
            AtomSet x = a & list[r];
            if (!x.is_subset_of_any(ignored)) kept.push_back(std::move(x));
        }
        LatticeInput task;
        task.n_atoms = input.n_atoms;
        task.coatoms = inclusion_maximals(kept);
        task.ignored_sets = ignored;
        task.ignored_atoms = input.ignored_atoms;
        task.emit_top = false;
        out.tasks.push_back(std::move(task));

        AtomSet u = a | input.ignored_atoms;
        std::vector<AtomSet> next;
        for (size_t r = 1; r < list.size(); ++r)
            if (!list[r].is_subset_of(u)) next.push_back(list[r]);
        ignored.push_back(std::move(u));
        list = std::move(next);
    }

    LatticeInput cont;
    cont.n_atoms = input.n_atoms;
    cont.coatoms = std::move(list);
    cont.ignored_sets = std::move(ignored);
    cont.ignored_atoms = input.ignored_atoms;
    cont.emit_top = false;
    out.tasks.push_back(std::move(cont));
    return out;
}

std::vector<LatticeInput> split_work(const LatticeInput& input, int max_tasks) {
    return split_work_detail(input, max_tasks).tasks;
}

} // namespace facelatt
