#include "facelatt/generators.hpp"

#include "facelatt/errors.hpp"

#include <algorithm>

namespace facelatt {

namespace {

// all k-subsets of {1..n} in lexicographic order
std::vector<AtomSet> subsets_of_size(int n, int k) {
    std::vector<AtomSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(AtomSet::from_indices(n, pick));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    if (k == 0) out = {AtomSet(n)};
    return out;
}

LatticeInput plain_input(int n, std::vector<AtomSet> coatoms) {
    LatticeInput in;
    in.n_atoms = n;
    in.coatoms = std::move(coatoms);
    in.ignored_atoms = AtomSet(n);
    return in;
}

} // namespace

LatticeInput gen_simplex(int d) {
    if (d < 1) throw InputError("simplex needs d >= 1");
    return plain_input(d + 1, subsets_of_size(d + 1, d));
}

LatticeInput gen_hypercube(int d) {
    if (d < 1) throw InputError("hypercube needs d >= 1");
    if (d > 20) throw SizeGuardError("hypercube d > 20 exceeds 2^20 vertices");
    const int n = 1 << d;
    std::vector<AtomSet> facets;
    facets.reserve(static_cast<size_t>(2 * d));
    for (int i = 0; i < d; ++i) {
        for (int b = 0; b <= 1; ++b) {
            std::vector<int> verts;
            verts.reserve(static_cast<size_t>(n / 2));
            for (int v = 0; v < n; ++v)
                if (((v >> i) & 1) == b) verts.push_back(v + 1);
            facets.push_back(AtomSet::from_indices(n, verts));
        }
    }
    return plain_input(n, std::move(facets));
}

LatticeInput gen_cross_polytope(int d) {
    if (d < 1) throw InputError("cross_polytope needs d >= 1");
    if (d > 20) throw SizeGuardError("cross_polytope d > 20 exceeds 2^20 facets");
    const int n = 2 * d;
    std::vector<AtomSet> facets;
    facets.reserve(static_cast<size_t>(1) << d);
    for (long long mask = 0; mask < (1LL << d); ++mask) {
        std::vector<int> verts(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            verts[static_cast<size_t>(i)] = 2 * i + 1 + static_cast<int>((mask >> i) & 1);
        facets.push_back(AtomSet::from_indices(n, verts));
    }
    return plain_input(n, std::move(facets));
}

LatticeInput gen_cyclic(int d, int n) {
    if (d < 2 || n <= d) throw InputError("cyclic needs n > d >= 2");
    if (n > 62) throw SizeGuardError("cyclic n > 62 not supported");
    // Gale evenness: a d-subset is a facet iff every maximal run of
    // consecutive vertices that touches neither endpoint has even length.
    // Enumerate by placing runs left to right; a gap of >= 1 separates runs.
    std::vector<AtomSet> facets;
    std::vector<int> current;
    auto place = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            facets.push_back(AtomSet::from_indices(n, current));
            return;
        }
        for (int run_start = start; run_start + remaining - 1 <= n; ++run_start) {
            for (int len = 1; len <= remaining; ++len) {
                const int run_end = run_start + len - 1;
                if (run_end > n) break;
                const bool interior = run_start > 1 && run_end < n;
                if (interior && (len % 2)) continue;
                for (int v = run_start; v <= run_end; ++v) current.push_back(v);
                self(self, run_end + 2, remaining - len);
                current.resize(current.size() - static_cast<size_t>(len));
            }
        }
    };
    place(place, 1, d);
    std::sort(facets.begin(), facets.end(), lex_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return plain_input(n, std::move(facets));
}

LatticeInput gen_rp2() {
    std::vector<AtomSet> tri;
    for (auto t : {std::array<int, 3>{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
                   {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}})
        tri.push_back(AtomSet::from_indices(6, {t[0], t[1], t[2]}));
    return plain_input(6, std::move(tri));
}

LatticeInput gen_uniform_matroid(int r, int n) {
    if (r < 1 || r > n) throw InputError("uniform_matroid needs 1 <= r <= n");
    if (n > 62) throw SizeGuardError("uniform_matroid n > 62 not supported");
    LatticeInput in = plain_input(n, subsets_of_size(n, r - 1));
    // rank-1 matroids have the empty hyperplane; the top (= the whole
    // ground set) is no union of coatoms then, so pin it
    if (r == 1) in.top = AtomSet::full(n);
    return in;
}

LatticeInput gen_nongraded_example() {
    return plain_input(4, {AtomSet::from_indices(4, {1}), AtomSet::from_indices(4, {2, 3}),
                           AtomSet::from_indices(4, {2, 4}), AtomSet::from_indices(4, {3, 4})});
}

LatticeInput gen_tight_span_example() {
    LatticeInput in = plain_input(
        6, {AtomSet::from_indices(6, {1, 2, 3, 4}), AtomSet::from_indices(6, {1, 2, 5, 6}),
            AtomSet::from_indices(6, {1, 3, 6}), AtomSet::from_indices(6, {2, 4, 5})});
    in.ignored_sets = {AtomSet::from_indices(6, {3, 4, 5, 6})};
    in.ignored_atoms = AtomSet::from_indices(6, {3, 4, 5, 6});
    in.emit_top = false;  // only the bounded part is wanted
    return in;
}

std::vector<LatticeInput> gen_complex_example() {
    // three quadrants of the plane glued along rays; atoms are the ray
    // directions W=1, N=2, E=3, S=4 and the origin O=5. Each cell is the
    // quadrant's bounded-face input: two ray facets, far face ignored.
    auto cell = [](int a, int b) {
        LatticeInput in = plain_input(
            5, {AtomSet::from_indices(5, {a, 5}), AtomSet::from_indices(5, {b, 5})});
        in.ignored_sets = {AtomSet::from_indices(5, {a, b})};
        return in;
    };
    return {cell(1, 2), cell(2, 3), cell(3, 4)};
}

std::vector<std::string> generator_families() {
    return {"simplex",          "hypercube",        "cross_polytope",
            "cyclic",           "rp2",              "uniform_matroid",
            "nongraded_example", "tight_span_example", "complex_example"};
}

std::vector<LatticeInput> generate(const std::string& family, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw InputError(family + " takes " + std::to_string(k) + " parameter(s), got " +
                             std::to_string(params.size()));
    };
    if (family == "simplex") { need(1); return {gen_simplex(params[0])}; }
    if (family == "hypercube") { need(1); return {gen_hypercube(params[0])}; }
    if (family == "cross_polytope") { need(1); return {gen_cross_polytope(params[0])}; }
    if (family == "cyclic") { need(2); return {gen_cyclic(params[0], params[1])}; }
    if (family == "rp2") { need(0); return {gen_rp2()}; }
    if (family == "uniform_matroid") { need(2); return {gen_uniform_matroid(params[0], params[1])}; }
    if (family == "nongraded_example") { need(0); return {gen_nongraded_example()}; }
    if (family == "tight_span_example") { need(0); return {gen_tight_span_example()}; }
    if (family == "complex_example") { need(0); return gen_complex_example(); }

    std::string known;
    for (const std::string& f : generator_families()) known += (known.empty() ? "" : ", ") + f;
    throw InputError("unknown family \"" + family + "\" (known: " + known + ")");
}

} // namespace facelatt
