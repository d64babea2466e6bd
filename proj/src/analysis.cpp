#include "facelatt/analysis.hpp"

#include "facelatt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace facelatt {

long long FVector::total() const {
    long long t = has_top ? 1 : 0;
    for (long long c : by_depth) t += c;
    return t;
}

std::vector<long long> FVector::top_down() const {
    std::vector<long long> out;
    if (has_top) out.push_back(1);
    out.insert(out.end(), by_depth.begin(), by_depth.end());
    return out;
}

std::string FVector::to_string() const {
    std::ostringstream os;
    os << "(";
    std::vector<long long> td = top_down();
    for (size_t i = 0; i < td.size(); ++i) os << (i ? ", " : "") << td[i];
    os << ")";
    return os.str();
}

FVector f_vector(const LatticeInput& in) {
    FaceStream fs(in);
    FVector f;
    while (fs.advance()) {
        if (fs.current_is_top()) {
            f.has_top = true;
            continue;
        }
        size_t d = static_cast<size_t>(fs.current_depth());
        if (f.by_depth.size() <= d) f.by_depth.resize(d + 1, 0);
        ++f.by_depth[d];
        if (fs.current_count() == 0) f.has_empty = true;
    }
    return f;
}

size_t HasseDiagram::face_count() const {
    size_t n = 0;
    for (const auto& lv : levels) n += lv.size();
    return n;
}

std::vector<size_t> HasseDiagram::offsets() const {
    std::vector<size_t> off(levels.size() + 1, 0);
    for (size_t i = 0; i < levels.size(); ++i) off[i + 1] = off[i] + levels[i].size();
    return off;
}

namespace {

struct FacePos {
    int level;
    int index;
};

struct CollectedFaces {
    std::vector<std::vector<AtomSet>> buckets;  // by emission depth
    std::optional<AtomSet> top;
};

CollectedFaces collect_buckets(const LatticeInput& in, long long max_faces) {
    CollectedFaces out;
    FaceStream fs(in);
    long long n = 0;
    while (fs.advance()) {
        if (++n > max_faces)
            throw SizeGuardError("face list exceeds " + std::to_string(max_faces) +
                                 " entries; raise the guard to proceed");
        if (fs.current_is_top()) {
            out.top = fs.current_face();
            continue;
        }
        size_t d = static_cast<size_t>(fs.current_depth());
        if (out.buckets.size() <= d) out.buckets.resize(d + 1);
        out.buckets[d].push_back(fs.current_face());
    }
    return out;
}

// levels = [top?] ++ buckets, each sorted; pos maps non-top values
HasseDiagram layout_levels(CollectedFaces&& cf,
                           std::unordered_map<AtomSet, FacePos, AtomSetHash>& pos) {
    HasseDiagram h;
    if (cf.top) h.levels.push_back({*cf.top});
    for (auto& b : cf.buckets) {
        std::sort(b.begin(), b.end(), lex_less);
        h.levels.push_back(std::move(b));
    }
    const int off = cf.top ? 1 : 0;
    for (size_t lv = static_cast<size_t>(off); lv < h.levels.size(); ++lv)
        for (size_t ix = 0; ix < h.levels[lv].size(); ++ix)
            pos.emplace(h.levels[lv][ix], FacePos{static_cast<int>(lv), static_cast<int>(ix)});
    return h;
}

void finish_edges(HasseDiagram& h) {
    std::sort(h.edges.begin(), h.edges.end());
    h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
}

} // namespace

HasseDiagram cover_relations_graded(const LatticeInput& in) {
    std::unordered_map<AtomSet, FacePos, AtomSetHash> pos;
    const bool has_top = emits_top_record(in);
    HasseDiagram h = layout_levels(collect_buckets(in, 2'000'000'000LL), pos);

    if (has_top && h.levels.size() > 1)
        for (size_t j = 0; j < h.levels[1].size(); ++j)
            h.edges.push_back({0, 0, 1, static_cast<int>(j)});

    const size_t off = has_top ? 1 : 0;
    for (size_t lv = off; lv < h.levels.size(); ++lv) {
        for (size_t ip = 0; ip < h.levels[lv].size(); ++ip) {
            const AtomSet& p = h.levels[lv][ip];
            for (const AtomSet& c : in.coatoms) {
                AtomSet x = p & c;
                if (x == p) continue;
                auto it = pos.find(x);
                if (it == pos.end()) continue;
                if (it->second.level <= static_cast<int>(lv))
                    throw InputError("emission depths do not grade this lattice: " +
                                     x.to_string() + " is below " + p.to_string() +
                                     " but not on a deeper level");
                if (it->second.level == static_cast<int>(lv) + 1)
                    h.edges.push_back({static_cast<int>(lv), static_cast<int>(ip),
                                       it->second.level, it->second.index});
            }
        }
    }
    finish_edges(h);
    return h;
}

HasseDiagram cover_relations_ungraded(const LatticeInput& in, long long max_faces) {
    std::unordered_map<AtomSet, FacePos, AtomSetHash> pos;
    const bool has_top = emits_top_record(in);
    HasseDiagram h = layout_levels(collect_buckets(in, max_faces), pos);

    // the top's lower covers are the value-maximal emitted faces
    if (has_top) {
        std::vector<const AtomSet*> all;
        for (size_t lv = 1; lv < h.levels.size(); ++lv)
            for (const AtomSet& f : h.levels[lv]) all.push_back(&f);
        std::stable_sort(all.begin(), all.end(),
                         [](const AtomSet* a, const AtomSet* b) { return a->count() > b->count(); });
        std::vector<const AtomSet*> accepted;
        for (const AtomSet* f : all) {
            bool dominated = false;
            for (const AtomSet* g : accepted)
                if (f->is_subset_of(*g)) { dominated = true; break; }
            if (dominated) continue;
            accepted.push_back(f);
            FacePos fp = pos.at(*f);
            h.edges.push_back({0, 0, fp.level, fp.index});
        }
    }

    const size_t off = has_top ? 1 : 0;
    std::vector<AtomSet> below;
    for (size_t lv = off; lv < h.levels.size(); ++lv) {
        for (const AtomSet& p : h.levels[lv]) {
            below.clear();
            for (const AtomSet& c : in.coatoms) {
                AtomSet x = p & c;
                if (x == p || !pos.count(x)) continue;
                if (std::find(below.begin(), below.end(), x) == below.end())
                    below.push_back(std::move(x));
            }
            FacePos pp = pos.at(p);
            for (const AtomSet& x : inclusion_maximals(below)) {
                FacePos xp = pos.at(x);
                h.edges.push_back({pp.level, pp.index, xp.level, xp.index});
            }
        }
    }
    finish_edges(h);
    return h;
}

std::string hasse_to_edge_list(const HasseDiagram& h) {
    std::ostringstream os;
    for (size_t i = 0; i < h.levels.size(); ++i) os << (i ? " " : "") << h.levels[i].size();
    os << "\n";
    std::vector<size_t> off = h.offsets();
    for (const HasseDiagram::Edge& e : h.edges)
        os << off[static_cast<size_t>(e.upper_level)] + static_cast<size_t>(e.upper_index) << " "
           << off[static_cast<size_t>(e.lower_level)] + static_cast<size_t>(e.lower_index) << "\n";
    return os.str();
}

std::string hasse_to_json(const HasseDiagram& h) {
    std::ostringstream os;
    os << "{\n  \"levels\": [";
    for (size_t lv = 0; lv < h.levels.size(); ++lv) {
        os << (lv ? ", " : "") << "[";
        for (size_t i = 0; i < h.levels[lv].size(); ++i) {
            os << (i ? ", " : "") << "[";
            std::vector<int> ix = h.levels[lv][i].indices();
            for (size_t k = 0; k < ix.size(); ++k) os << (k ? "," : "") << ix[k];
            os << "]";
        }
        os << "]";
    }
    os << "],\n  \"edges\": [";
    std::vector<size_t> off = h.offsets();
    for (size_t i = 0; i < h.edges.size(); ++i) {
        const HasseDiagram::Edge& e = h.edges[i];
        os << (i ? ", " : "")
           << "[" << off[static_cast<size_t>(e.upper_level)] + static_cast<size_t>(e.upper_index)
           << "," << off[static_cast<size_t>(e.lower_level)] + static_cast<size_t>(e.lower_index)
           << "]";
    }
    os << "]\n}\n";
    return os.str();
}

std::vector<AtomSet> brute_force_faces(const LatticeInput& in, long long max_faces) {
    ValidationReport rep = validate(in);
    if (!rep.ok()) throw InputError("invalid iteration input:\n" + rep.to_string());

    // closure of the coatom family under intersection-with-a-coatom
    std::unordered_set<AtomSet, AtomSetHash> seen;
    std::vector<AtomSet> closure;
    for (const AtomSet& c : in.coatoms)
        if (seen.insert(c).second) closure.push_back(c);
    for (size_t head = 0; head < closure.size(); ++head) {
        for (const AtomSet& c : in.coatoms) {
            AtomSet x = closure[head] & c;
            if (!seen.insert(x).second) continue;
            if (static_cast<long long>(closure.size()) >= max_faces)
                throw SizeGuardError("intersection closure exceeds " + std::to_string(max_faces) +
                                     " sets; raise the guard to proceed");
            closure.push_back(std::move(x));
        }
    }

    std::vector<AtomSet> out;
    for (const AtomSet& x : closure) {
        if (!(x & in.ignored_atoms).empty()) continue;
        if (x.is_subset_of_any(in.ignored_sets)) continue;
        out.push_back(x);
    }
    if (emits_top_record(in)) {
        // the top record is emitted unconditionally; add its value unless
        // the filtered closure already contains it
        AtomSet t = in.top_face();
        bool present = false;
        for (const AtomSet& x : out)
            if (x == t) { present = true; break; }
        if (!present) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

CheckResult check_against_closure(const LatticeInput& in, long long max_faces) {
    CheckResult r;
    std::vector<AtomSet> oracle = brute_force_faces(in, max_faces);
    r.faces = static_cast<long long>(oracle.size());

    std::vector<FaceRecord> recs = collect_faces(in);
    std::unordered_set<AtomSet, AtomSetHash> emitted;
    int top_records = 0;
    for (const FaceRecord& rec : recs) {
        if (rec.is_top) {
            ++top_records;
            continue;
        }
        // exactly-once applies to the algorithm's own emissions; the top
        // record may legitimately repeat the value of a lone coatom
        if (!emitted.insert(rec.atoms).second) {
            r.detail = "face emitted more than once: " + rec.atoms.to_string();
            return r;
        }
    }
    const int expect_top = emits_top_record(in) ? 1 : 0;
    if (top_records != expect_top) {
        r.detail = "expected " + std::to_string(expect_top) + " top record(s), saw " +
                   std::to_string(top_records);
        return r;
    }
    if (expect_top) emitted.insert(in.top_face());
    for (const AtomSet& x : oracle)
        if (!emitted.count(x)) {
            r.detail = "missing face: " + x.to_string();
            return r;
        }
    if (emitted.size() != oracle.size()) {
        for (const FaceRecord& rec : recs) {
            if (!std::binary_search(oracle.begin(), oracle.end(), rec.atoms,
                                    [](const AtomSet& a, const AtomSet& b) { return lex_less(a, b); })) {
                r.detail = "extra face: " + rec.atoms.to_string();
                return r;
            }
        }
        r.detail = "face count mismatch";
        return r;
    }
    r.ok = true;
    return r;
}

std::vector<std::pair<int, int>> cover_pairs(std::span<const AtomSet> faces) {
    const int F = static_cast<int>(faces.size());
    auto strictly_below = [&](int i, int j) {
        return faces[static_cast<size_t>(i)].is_subset_of(faces[static_cast<size_t>(j)]) &&
               !(faces[static_cast<size_t>(i)] == faces[static_cast<size_t>(j)]);
    };
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < F; ++i) {
        for (int j = 0; j < F; ++j) {
            if (i == j || !strictly_below(i, j)) continue;
            bool direct = true;
            for (int k = 0; k < F && direct; ++k) {
                if (k == i || k == j) continue;
                if (strictly_below(i, k) && strictly_below(k, j)) direct = false;
            }
            if (direct) covers.emplace_back(i, j);
        }
    }
    return covers;
}

bool is_locally_branched(std::span<const AtomSet> faces) {
    const int F = static_cast<int>(faces.size());
    std::vector<std::pair<int, int>> covers = cover_pairs(faces);
    std::vector<std::vector<int>> up(static_cast<size_t>(F));
    for (auto [lo, hi] : covers) up[static_cast<size_t>(lo)].push_back(hi);

    for (auto [a, b] : covers) {
        for (int c : up[static_cast<size_t>(b)]) {
            // |[a, c]| counts a, b, c and anything else between
            int interval = 0;
            for (int d = 0; d < F; ++d)
                if (faces[static_cast<size_t>(a)].is_subset_of(faces[static_cast<size_t>(d)]) &&
                    faces[static_cast<size_t>(d)].is_subset_of(faces[static_cast<size_t>(c)]))
                    ++interval;
            if (interval < 4) return false;
        }
    }
    return true;
}

namespace {

// index of the least element of {k : pred(k)}, or -1 when the subset has no
// least element; `faces` ordered by inclusion
template <typename Pred>
int least_where(std::span<const AtomSet> faces, Pred pred) {
    int best = -1;
    for (int k = 0; k < static_cast<int>(faces.size()); ++k) {
        if (!pred(k)) continue;
        if (best < 0 || faces[static_cast<size_t>(k)].count() < faces[static_cast<size_t>(best)].count())
            best = k;
    }
    if (best < 0) return -1;
    for (int k = 0; k < static_cast<int>(faces.size()); ++k)
        if (pred(k) && !faces[static_cast<size_t>(best)].is_subset_of(faces[static_cast<size_t>(k)]))
            return -1;
    return best;
}

template <typename Pred>
int greatest_where(std::span<const AtomSet> faces, Pred pred) {
    int best = -1;
    for (int k = 0; k < static_cast<int>(faces.size()); ++k) {
        if (!pred(k)) continue;
        if (best < 0 || faces[static_cast<size_t>(k)].count() > faces[static_cast<size_t>(best)].count())
            best = k;
    }
    if (best < 0) return -1;
    for (int k = 0; k < static_cast<int>(faces.size()); ++k)
        if (pred(k) && !faces[static_cast<size_t>(k)].is_subset_of(faces[static_cast<size_t>(best)]))
            return -1;
    return best;
}

struct LatticeShape {
    int bottom;
    int top;
};

LatticeShape require_lattice(std::span<const AtomSet> faces) {
    if (faces.empty()) throw InputError("not a lattice: empty family");
    auto sub = [&](int i, int j) {
        return faces[static_cast<size_t>(i)].is_subset_of(faces[static_cast<size_t>(j)]);
    };
    int bottom = least_where(faces, [](int) { return true; });
    int top = greatest_where(faces, [](int) { return true; });
    if (bottom < 0) throw InputError("not a lattice: no least element");
    if (top < 0) throw InputError("not a lattice: no greatest element");
    const int F = static_cast<int>(faces.size());
    for (int i = 0; i < F; ++i) {
        for (int j = i + 1; j < F; ++j) {
            if (least_where(faces, [&](int k) { return sub(i, k) && sub(j, k); }) < 0)
                throw InputError("not a lattice: " + faces[static_cast<size_t>(i)].to_string() +
                                 " and " + faces[static_cast<size_t>(j)].to_string() +
                                 " have no least upper bound");
            if (greatest_where(faces, [&](int k) { return sub(k, i) && sub(k, j); }) < 0)
                throw InputError("not a lattice: " + faces[static_cast<size_t>(i)].to_string() +
                                 " and " + faces[static_cast<size_t>(j)].to_string() +
                                 " have no greatest lower bound");
        }
    }
    return {bottom, top};
}

} // namespace

bool is_atomic(std::span<const AtomSet> faces) {
    LatticeShape shape = require_lattice(faces);
    auto sub = [&](int i, int j) {
        return faces[static_cast<size_t>(i)].is_subset_of(faces[static_cast<size_t>(j)]);
    };
    std::vector<int> atoms;
    for (auto [lo, hi] : cover_pairs(faces))
        if (lo == shape.bottom) atoms.push_back(hi);

    for (int p = 0; p < static_cast<int>(faces.size()); ++p) {
        std::vector<int> below;
        for (int a : atoms)
            if (sub(a, p)) below.push_back(a);
        int join = least_where(faces, [&](int k) {
            for (int a : below)
                if (!sub(a, k)) return false;
            return true;
        });
        if (join < 0) throw InternalError("join of atoms vanished from a verified lattice");
        if (join != p && !(faces[static_cast<size_t>(join)] == faces[static_cast<size_t>(p)]))
            return false;
    }
    return true;
}

bool is_coatomic(std::span<const AtomSet> faces) {
    LatticeShape shape = require_lattice(faces);
    auto sub = [&](int i, int j) {
        return faces[static_cast<size_t>(i)].is_subset_of(faces[static_cast<size_t>(j)]);
    };
    std::vector<int> coatoms;
    for (auto [lo, hi] : cover_pairs(faces))
        if (hi == shape.top) coatoms.push_back(lo);

    for (int p = 0; p < static_cast<int>(faces.size()); ++p) {
        std::vector<int> above;
        for (int c : coatoms)
            if (sub(p, c)) above.push_back(c);
        int meet = greatest_where(faces, [&](int k) {
            for (int c : above)
                if (!sub(k, c)) return false;
            return true;
        });
        if (meet < 0) throw InternalError("meet of coatoms vanished from a verified lattice");
        if (meet != p && !(faces[static_cast<size_t>(meet)] == faces[static_cast<size_t>(p)]))
            return false;
    }
    return true;
}

} // namespace facelatt
