#include "facelatt/kunz.hpp"

#include "facelatt/errors.hpp"
#include "facelatt/iterator.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace facelatt {

namespace {

long long zgcd(long long a, long long b) { return std::gcd(a, b); }
mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
const mpz_class& to_mpz(const mpz_class& v) { return v; }

// coefficient row of x_i + x_j - x_k over x_1..x_vars (+2 at i when i == j)
template <class Z>
std::vector<Z> form_row(const KunzInequality& q, int vars) {
    std::vector<Z> row(static_cast<size_t>(vars), Z(0));
    row[static_cast<size_t>(q.i - 1)] += 1;
    row[static_cast<size_t>(q.j - 1)] += 1;
    row[static_cast<size_t>(q.k - 1)] -= 1;
    return row;
}

template <class Z>
Z dot_form(const KunzInequality& q, const std::vector<Z>& x) {
    return x[static_cast<size_t>(q.i - 1)] + x[static_cast<size_t>(q.j - 1)] -
           x[static_cast<size_t>(q.k - 1)];
}

template <class Z>
bool satisfies_all(const std::vector<KunzInequality>& qs, const std::vector<Z>& x) {
    for (const KunzInequality& q : qs)
        if (dot_form(q, x) < 0) return false;
    return true;
}

template <class Z>
void make_primitive(std::vector<Z>& x) {
    Z g(0);
    for (const Z& v : x) g = zgcd(g, v < 0 ? Z(-v) : v);
    if (g > 1)
        for (Z& v : x) v /= g;
}

// Exhaustive extreme-ray search: choose m-2 linearly independent tight
// inequalities (indices increasing), keep a fraction-free row echelon as the
// choice stack grows, and read the 1-dimensional kernel off each full stack.
//
// Fraction-free (Bareiss) means every echelon entry is, up to sign, a minor
// of the chosen subsystem. Subsystem coefficients lie in {-2..2}, so for
// m <= 9 any minor is bounded by 7! * 2^7 = 645,120 and every intermediate
// product by ~4.2e11 -- the long long instantiation is exact with room to
// spare. Larger m (caller raised the guard) runs on mpz_class instead.
template <class Z>
struct RaySearch {
    int vars;
    int need;
    const std::vector<KunzInequality>& qs;
    std::vector<std::vector<Z>> rows;  // precomputed coefficient rows
    std::vector<std::vector<Z>> ech;   // echelon rows, one per chosen inequality
    std::vector<int> pivot;            // pivot column of each echelon row
    std::set<std::vector<Z>> found;

    RaySearch(int m, const std::vector<KunzInequality>& inequalities)
        : vars(m - 1), need(m - 2), qs(inequalities) {
        rows.reserve(qs.size());
        for (const KunzInequality& q : qs) rows.push_back(form_row<Z>(q, vars));
        ech.assign(static_cast<size_t>(need), {});
        pivot.assign(static_cast<size_t>(need), -1);
    }

    // reduce `row` against the first `depth` echelon rows; returns the pivot
    // column of the reduced row, or -1 if it vanished (linearly dependent)
    int reduce(std::vector<Z>& row, int depth) const {
        Z prev(1);
        for (int t = 0; t < depth; ++t) {
            const size_t tt = static_cast<size_t>(t);
            const Z piv = ech[tt][static_cast<size_t>(pivot[tt])];
            const Z f = row[static_cast<size_t>(pivot[tt])];
            for (int c = 0; c < vars; ++c) {
                const size_t cc = static_cast<size_t>(c);
                row[cc] = (row[cc] * piv - f * ech[tt][cc]) / prev;
            }
            prev = piv;
        }
        for (int c = 0; c < vars; ++c)
            if (row[static_cast<size_t>(c)] != 0) return c;
        return -1;
    }

    void descend(int next, int depth) {
        if (depth == need) {
            solve();
            return;
        }
        for (int q = next; q + (need - depth) <= static_cast<int>(qs.size()); ++q) {
            std::vector<Z> row = rows[static_cast<size_t>(q)];
            const int p = reduce(row, depth);
            if (p < 0) continue;
            ech[static_cast<size_t>(depth)] = std::move(row);
            pivot[static_cast<size_t>(depth)] = p;
            descend(q + 1, depth + 1);
        }
    }

    void solve() {
        // exactly one non-pivot column remains; setting it to the last pivot
        // makes the kernel vector the (integral) vector of maximal minors
        std::vector<char> is_pivot(static_cast<size_t>(vars), 0);
        for (int t = 0; t < need; ++t) is_pivot[static_cast<size_t>(pivot[static_cast<size_t>(t)])] = 1;
        int free_col = -1;
        for (int c = 0; c < vars; ++c)
            if (!is_pivot[static_cast<size_t>(c)]) {
                free_col = c;
                break;
            }
        std::vector<Z> v(static_cast<size_t>(vars), Z(0));
        v[static_cast<size_t>(free_col)] =
            ech[static_cast<size_t>(need - 1)][static_cast<size_t>(pivot[static_cast<size_t>(need - 1)])];
        for (int t = need - 1; t >= 0; --t) {
            const size_t tt = static_cast<size_t>(t);
            const int pc = pivot[tt];
            Z num(0);
            for (int c = 0; c < vars; ++c)
                if (c != pc) num += ech[tt][static_cast<size_t>(c)] * v[static_cast<size_t>(c)];
            const Z& piv = ech[tt][static_cast<size_t>(pc)];
            if (num % piv != 0)
                throw InternalError("kernel back-substitution lost exactness");
            v[static_cast<size_t>(pc)] = -(num / piv);
        }

        const bool plus = satisfies_all(qs, v);
        std::vector<Z> neg(v.size());
        for (size_t c = 0; c < v.size(); ++c) neg[c] = -v[c];
        const bool minus = satisfies_all(qs, neg);
        if (plus && minus) throw InternalError("cone contains a line; rays are undefined");
        if (!plus && !minus) return;  // tight subset meets the cone only at 0
        std::vector<Z>& ray = plus ? v : neg;
        make_primitive(ray);
        found.insert(std::move(ray));
    }
};

template <class Z>
std::vector<Ray> enumerate_rays_impl(int m, const std::vector<KunzInequality>& qs) {
    const int total = static_cast<int>(qs.size());
    const int need = m - 2;
    const int last_first = total - need;
    std::set<std::vector<Z>> all;
    std::exception_ptr failure;
    // chunks are disjoint by smallest chosen inequality, so merging sets of
    // already-normalized rays is the only cross-chunk interaction
#ifdef FACELATT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int first = 0; first <= last_first; ++first) {
        try {
            RaySearch<Z> search(m, qs);
            std::vector<Z> row = search.rows[static_cast<size_t>(first)];
            const int p = search.reduce(row, 0);
            if (p < 0) continue;
            search.ech[0] = std::move(row);
            search.pivot[0] = p;
            search.descend(first + 1, 1);
#ifdef FACELATT_HAVE_OPENMP
#pragma omp critical
#endif
            all.insert(search.found.begin(), search.found.end());
        } catch (...) {
#ifdef FACELATT_HAVE_OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Ray> out;
    out.reserve(all.size());
    for (const std::vector<Z>& v : all) {  // std::set iterates in lex order
        Ray r;
        r.reserve(v.size());
        for (const Z& c : v) r.push_back(to_mpz(c));
        out.push_back(std::move(r));
    }
    return out;
}

// fraction-free row rank, capped: stops growing the echelon once `cap` rows
// are independent (all we ever need to know is whether rank reaches m-2)
int matrix_rank(std::vector<std::vector<mpz_class>> rows, int cap) {
    std::vector<std::vector<mpz_class>> ech;
    std::vector<size_t> piv;
    for (std::vector<mpz_class>& row : rows) {
        mpz_class prev(1);
        for (size_t t = 0; t < ech.size(); ++t) {
            const mpz_class p = ech[t][piv[t]];
            const mpz_class f = row[piv[t]];
            for (size_t c = 0; c < row.size(); ++c) row[c] = (row[c] * p - f * ech[t][c]) / prev;
            prev = p;
        }
        size_t pc = row.size();
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) {
                pc = c;
                break;
            }
        if (pc == row.size()) continue;
        piv.push_back(pc);
        ech.push_back(std::move(row));
        if (static_cast<int>(ech.size()) >= cap) break;
    }
    return static_cast<int>(ech.size());
}

AtomSet apply_ray_perm(const std::vector<int>& perm, const AtomSet& s, int n) {
    std::vector<int> ids;
    ids.reserve(static_cast<size_t>(s.count()));
    for (int a : s.indices()) ids.push_back(perm[static_cast<size_t>(a - 1)] + 1);
    return AtomSet::from_indices(n, ids);
}

// Shared tail of both model constructors: sort, verify every ray against
// the full inequality list, build tight sets, pick out the facets.
KunzModel build_model(int m, std::vector<Ray> rays) {
    KunzModel km;
    km.m = m;
    km.inequalities = kunz_inequalities(m);
    const int vars = m - 1;

    std::sort(rays.begin(), rays.end());
    if (rays.empty()) throw InputError("ray list is empty");
    for (size_t r = 0; r < rays.size(); ++r) {
        const std::string where = "ray " + std::to_string(r + 1) + " (sorted order)";
        if (rays[r].size() != static_cast<size_t>(vars))
            throw InputError(where + " has " + std::to_string(rays[r].size()) +
                             " coordinates, expected " + std::to_string(vars));
        if (r > 0 && rays[r] == rays[r - 1]) throw InputError("duplicate " + where);

        size_t lead = rays[r].size();
        for (size_t c = 0; c < rays[r].size(); ++c)
            if (rays[r][c] != 0) {
                lead = c;
                break;
            }
        if (lead == rays[r].size()) throw InputError(where + " is the zero vector");
        if (rays[r][lead] < 0) throw InputError(where + " has a negative leading coordinate");

        mpz_class g(0);
        for (const mpz_class& v : rays[r]) {
            mpz_class a = v < 0 ? mpz_class(-v) : v;
            g = zgcd(g, a);
        }
        if (g != 1) throw InputError(where + " is not primitive (gcd " + g.get_str() + ")");

        std::vector<std::vector<mpz_class>> tight_forms;
        for (const KunzInequality& q : km.inequalities) {
            const mpz_class s = dot_form(q, rays[r]);
            if (s < 0)
                throw InputError(where + " violates x_" + std::to_string(q.i) + " + x_" +
                                 std::to_string(q.j) + " >= x_" + std::to_string(q.k));
            if (s == 0) tight_forms.push_back(form_row<mpz_class>(q, vars));
        }
        if (matrix_rank(std::move(tight_forms), m - 2) != m - 2)
            throw InputError(where + " is not extreme: its tight inequalities have rank below " +
                             std::to_string(m - 2));
    }
    km.rays = std::move(rays);

    const int n = static_cast<int>(km.rays.size());
    km.tight_rays.reserve(km.inequalities.size());
    for (const KunzInequality& q : km.inequalities) {
        std::vector<int> ids;
        for (int r = 0; r < n; ++r)
            if (dot_form(q, km.rays[static_cast<size_t>(r)]) == 0) ids.push_back(r + 1);
        km.tight_rays.push_back(AtomSet::from_indices(n, ids));
    }

    for (size_t q = 0; q < km.tight_rays.size(); ++q) {
        const AtomSet& tq = km.tight_rays[q];
        const std::string label = "inequality " + std::to_string(q + 1) + " (" +
                                  std::to_string(km.inequalities[q].i) + "," +
                                  std::to_string(km.inequalities[q].j) + ")";
        size_t twin = q;
        bool dominated = false;
        for (size_t p = 0; p < km.tight_rays.size() && !dominated; ++p) {
            if (p == q) continue;
            if (tq == km.tight_rays[p]) {
                if (p < twin) twin = p;
            } else if (tq.is_subset_of(km.tight_rays[p])) {
                dominated = true;
            }
        }
        if (dominated) {
            km.notes.push_back(label + " is tight on a non-maximal ray set; dropped");
        } else if (twin < q) {
            km.notes.push_back(label + " repeats the tight set of inequality " +
                               std::to_string(twin + 1) + "; collapsed");
        } else {
            km.facets.push_back(tq);
            km.facet_ineq.push_back(static_cast<int>(q));
        }
    }
    return km;
}

} // namespace

std::vector<KunzInequality> kunz_inequalities(int m) {
    if (m < 3) throw InputError("multiplicity must be at least 3");
    if (m > 64) throw SizeGuardError("multiplicities beyond 64 are not supported");
    std::vector<KunzInequality> out;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i; j <= m - 1; ++j) {
            const int k = (i + j) % m;
            if (k == 0) continue;
            out.push_back({i, j, k});
        }
    return out;
}

std::vector<Ray> enumerate_rays(int m, int guard) {
    const std::vector<KunzInequality> qs = kunz_inequalities(m);
    if (m > guard)
        throw SizeGuardError("ray enumeration is guarded to m <= " + std::to_string(guard) +
                             "; supply a ray file for multiplicity " + std::to_string(m));
    return m <= 9 ? enumerate_rays_impl<long long>(m, qs)
                  : enumerate_rays_impl<mpz_class>(m, qs);
}

KunzModel kunz_model(int m, int guard) { return build_model(m, enumerate_rays(m, guard)); }

KunzModel kunz_model_from_rays(int m, std::vector<Ray> rays) {
    return build_model(m, std::move(rays));
}

LatticeInput kunz_input(const KunzModel& model) {
    LatticeInput in;
    in.n_atoms = static_cast<int>(model.rays.size());
    in.coatoms = model.facets;
    in.ignored_atoms = AtomSet(in.n_atoms);
    return in;
}

std::pair<int, int> face_e_t(const KunzModel& model, const AtomSet& face_rays) {
    std::uint64_t lhs = 0, rhs = 0;
    for (size_t q = 0; q < model.inequalities.size(); ++q) {
        if (!face_rays.is_subset_of(model.tight_rays[q])) continue;
        const KunzInequality& iq = model.inequalities[q];
        lhs |= (std::uint64_t{1} << (iq.i - 1)) | (std::uint64_t{1} << (iq.j - 1));
        rhs |= std::uint64_t{1} << (iq.k - 1);
    }
    const int vars = model.m - 1;
    return {1 + vars - std::popcount(rhs), vars - std::popcount(lhs)};
}

KunzFace classify_face(const KunzModel& model, const AtomSet& face_rays) {
    KunzFace f;
    f.rays = face_rays;
    for (size_t q = 0; q < model.inequalities.size(); ++q)
        if (face_rays.is_subset_of(model.tight_rays[q])) f.tight.push_back(static_cast<int>(q));
    std::tie(f.e, f.t) = face_e_t(model, face_rays);
    return f;
}

OrbitTable orbits(const KunzModel& model) {
    OrbitTable tab;
    const int m = model.m;
    for (int u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1) tab.units.push_back(u);
    const int n = static_cast<int>(model.rays.size());

    for (int u : tab.units) {
        std::vector<int> perm(static_cast<size_t>(n), -1);
        for (int r = 0; r < n; ++r) {
            Ray img(static_cast<size_t>(m - 1));
            for (int c = 0; c < m - 1; ++c)
                img[static_cast<size_t>(u * (c + 1) % m - 1)] =
                    model.rays[static_cast<size_t>(r)][static_cast<size_t>(c)];
            const auto it = std::lower_bound(model.rays.begin(), model.rays.end(), img);
            if (it == model.rays.end() || *it != img)
                throw InternalError("unit " + std::to_string(u) + " maps ray " +
                                    std::to_string(r + 1) +
                                    " outside the ray list; enumeration incomplete");
            perm[static_cast<size_t>(r)] = static_cast<int>(it - model.rays.begin());
        }
        tab.ray_perm.push_back(std::move(perm));
    }

    std::unordered_map<AtomSet, int, AtomSetHash> facet_id;
    for (size_t f = 0; f < model.facets.size(); ++f)
        facet_id.emplace(model.facets[f], static_cast<int>(f));
    for (size_t ui = 0; ui < tab.units.size(); ++ui) {
        std::vector<int> fperm(model.facets.size(), -1);
        for (size_t f = 0; f < model.facets.size(); ++f) {
            const AtomSet img = apply_ray_perm(tab.ray_perm[ui], model.facets[f], n);
            const auto it = facet_id.find(img);
            if (it == facet_id.end())
                throw InternalError("unit " + std::to_string(tab.units[ui]) + " maps facet " +
                                    std::to_string(f + 1) + " outside the facet list");
            fperm[f] = it->second;
        }
        tab.facet_perm.push_back(std::move(fperm));
    }

    tab.facet_orbit.assign(model.facets.size(), -1);
    for (size_t f = 0; f < model.facets.size(); ++f) {
        if (tab.facet_orbit[f] >= 0) continue;
        const int id = tab.orbit_count++;
        for (size_t ui = 0; ui < tab.units.size(); ++ui)
            tab.facet_orbit[static_cast<size_t>(tab.facet_perm[ui][f])] = id;
    }
    return tab;
}

AtomSet canonical_rays(const OrbitTable& table, const AtomSet& face_rays) {
    AtomSet best = face_rays;
    const int n = face_rays.capacity();
    for (size_t ui = 0; ui < table.units.size(); ++ui) {
        AtomSet img = apply_ray_perm(table.ray_perm[ui], face_rays, n);
        if (lex_less(img, best)) best = img;
    }
    return best;
}

BadOrbitCount count_bad_orbits(const KunzModel& model, WilfFilters filters, int max_tasks) {
    const OrbitTable tab = orbits(model);
    const int n = static_cast<int>(model.rays.size());

    const auto is_bad = [&](int e, int t) {
        if (filters.two_e_ge_m && 2 * e >= model.m) return false;
        if (filters.e_gt_t && e > t) return false;
        if (filters.three_e_ge_m && 3 * e >= model.m) return false;
        return true;
    };

    // Top-level driver with orbit pruning. Facets are walked in lex order, so
    // every head reached is the lexicographically first facet of a fresh
    // orbit: when a head is taken, its whole orbit joins the ignored list and
    // the mates drop out of the remaining facet list, exactly the "mark the
    // orbit visited" step. Faces lost under a skipped mate are unit images of
    // faces some earlier branch still enumerates, so each orbit keeps at
    // least one representative.
    struct Entry {
        AtomSet set;
        int fidx;
    };
    std::vector<Entry> list;
    list.reserve(model.facets.size());
    for (size_t f = 0; f < model.facets.size(); ++f)
        list.push_back({model.facets[f], static_cast<int>(f)});
    std::sort(list.begin(), list.end(),
              [](const Entry& a, const Entry& b) { return lex_less(a.set, b.set); });

    std::vector<AtomSet> ignored;
    std::vector<int> reps;
    std::vector<LatticeInput> branches;
    size_t pos = 0;
    while (pos < list.size()) {
        const Entry head = list[pos];
        reps.push_back(head.fidx);

        std::vector<AtomSet> kept;
        for (size_t r = pos + 1; r < list.size(); ++r) {
            AtomSet x = head.set & list[r].set;
            if (!x.is_subset_of_any(ignored)) kept.push_back(std::move(x));
        }
        LatticeInput task;
        task.n_atoms = n;
        task.coatoms = inclusion_maximals(kept);
        task.ignored_sets = ignored;
        task.ignored_atoms = AtomSet(n);
        task.emit_top = false;
        branches.push_back(std::move(task));

        std::set<int> orbit_ids;  // includes the head itself via the identity unit
        for (size_t ui = 0; ui < tab.units.size(); ++ui)
            orbit_ids.insert(tab.facet_perm[ui][static_cast<size_t>(head.fidx)]);
        const size_t old_size = ignored.size();
        for (int g : orbit_ids) ignored.push_back(model.facets[static_cast<size_t>(g)]);
        const std::span<const AtomSet> fresh(ignored.data() + old_size,
                                             ignored.size() - old_size);
        list.erase(std::remove_if(list.begin() + static_cast<long>(pos) + 1, list.end(),
                                  [&](const Entry& e) { return e.set.is_subset_of_any(fresh); }),
                   list.end());
        ++pos;
    }

    const int n_branches = static_cast<int>(branches.size());
    std::vector<std::vector<AtomSet>> branch_bad(static_cast<size_t>(n_branches));
    std::vector<long long> branch_visited(static_cast<size_t>(n_branches), 0);
    std::exception_ptr failure;
#ifdef FACELATT_HAVE_OPENMP
    const int threads = std::max(1, std::min(max_tasks, n_branches));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (max_tasks > 1)
#else
    (void)max_tasks;
#endif
    for (int b = 0; b < n_branches; ++b) {
        try {
            const size_t bb = static_cast<size_t>(b);
            std::unordered_set<AtomSet, AtomSetHash> local_seen;
            long long visited = 0;
            const auto consider = [&](const AtomSet& face) {
                ++visited;
                const auto [e, t] = face_e_t(model, face);
                if (!is_bad(e, t)) return;
                AtomSet canon = canonical_rays(tab, face);
                if (local_seen.insert(canon).second) branch_bad[bb].push_back(std::move(canon));
            };
            consider(model.facets[static_cast<size_t>(reps[bb])]);
            FaceStream fs(branches[bb], /*check=*/false);
            while (fs.advance()) consider(fs.current_face());
            branch_visited[bb] = visited;
        } catch (...) {
#ifdef FACELATT_HAVE_OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    BadOrbitCount out;
    std::unordered_set<AtomSet, AtomSetHash> seen;
    const auto admit = [&](const AtomSet& canon) {
        if (!seen.insert(canon).second) return;
        out.census.push_back(classify_face(model, canon));
        ++out.bad_orbits;
    };

    // the whole cone is a face too (the iterator's top record)
    {
        const AtomSet all = AtomSet::full(n);
        ++out.faces_visited;
        const auto [e, t] = face_e_t(model, all);
        if (is_bad(e, t)) admit(canonical_rays(tab, all));
    }
    for (int b = 0; b < n_branches; ++b) {
        out.faces_visited += branch_visited[static_cast<size_t>(b)];
        for (const AtomSet& canon : branch_bad[static_cast<size_t>(b)]) admit(canon);
    }
    return out;
}

std::string census_line(const KunzModel& model, const KunzFace& face) {
    std::ostringstream os;
    os << "e=" << face.e << " t=" << face.t << " tight=";
    for (size_t idx = 0; idx < face.tight.size(); ++idx) {
        const KunzInequality& q = model.inequalities[static_cast<size_t>(face.tight[idx])];
        if (idx) os << ';';
        os << q.i << ',' << q.j;
    }
    os << " rays=";
    const std::vector<int> ids = face.rays.indices();
    for (size_t idx = 0; idx < ids.size(); ++idx) {
        if (idx) os << ',';
        os << ids[idx];
    }
    return os.str();
}

std::string ray_file_text(const KunzModel& model) {
    std::ostringstream os;
    os << "m " << model.m << " rays " << model.rays.size() << "\n";
    for (const Ray& r : model.rays) {
        for (size_t c = 0; c < r.size(); ++c) {
            if (c) os << ' ';
            os << r[c];
        }
        os << "\n";
    }
    return os.str();
}

std::pair<int, std::vector<Ray>> parse_ray_file(const std::string& text) {
    std::istringstream is(text);
    std::string kw1, kw2;
    long long m = 0, count = 0;
    if (!(is >> kw1 >> m >> kw2 >> count) || kw1 != "m" || kw2 != "rays")
        throw InputError("ray file must start with a header \"m <m> rays <count>\"");
    if (m < 3) throw InputError("ray file multiplicity must be at least 3");
    if (count < 0) throw InputError("ray file ray count is negative");

    std::vector<Ray> rays;
    rays.reserve(static_cast<size_t>(count));
    std::string tok;
    for (long long r = 0; r < count; ++r) {
        Ray ray;
        ray.reserve(static_cast<size_t>(m - 1));
        for (long long c = 0; c + 1 < m; ++c) {
            if (!(is >> tok))
                throw InputError("ray file ends early in ray " + std::to_string(r + 1) + " of " +
                                 std::to_string(count));
            try {
                ray.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw InputError("ray file: \"" + tok + "\" is not an integer");
            }
        }
        rays.push_back(std::move(ray));
    }
    if (is >> tok) throw InputError("ray file has trailing content: \"" + tok + "\"");
    return {static_cast<int>(m), std::move(rays)};
}

} // namespace facelatt
