#pragma once

// Kunz cone machinery: exact extreme-ray enumeration at small multiplicity,
// the ray-incidence lattice input for the face iterator, the unit-group
// symmetry on coordinates, and the bad-orbit census behind the Wilf counts.
//
// The cone C_m lives in R^{m-1} with coordinates x_1..x_{m-1} and is cut out
// by x_i + x_j >= x_{(i+j) mod m} over 1 <= i <= j <= m-1, i+j != 0 (mod m).
// Everything is exact integer arithmetic; no floating point, no tolerance.

#include "facelatt/atomset.hpp"
#include "facelatt/lattice_input.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace facelatt {

struct KunzInequality {
    int i = 0, j = 0;  // lhs variables, 1 <= i <= j <= m-1
    int k = 0;         // rhs variable, (i+j) mod m; never 0 by construction
};

// primitive integer generator of an extreme ray; first nonzero entry positive
using Ray = std::vector<mpz_class>;

// A multiplicity with its inequalities, verified extreme rays (sorted
// lexicographically; atom id r means rays[r-1]), the per-inequality tight-ray
// sets, and the inclusion-maximal distinct tight sets, which are the facets.
struct KunzModel {
    int m = 0;
    std::vector<KunzInequality> inequalities;
    std::vector<Ray> rays;
    std::vector<AtomSet> tight_rays;  // one per inequality
    std::vector<AtomSet> facets;      // deduped maximal tight sets, by first inequality
    std::vector<int> facet_ineq;      // first inequality index defining each facet
    std::vector<std::string> notes;   // inequalities dropped or collapsed, and why
};

// e counts unit coordinates the face's equations leave free on the right,
// t the same on the left; both are constant on unit-group orbits.
struct KunzFace {
    AtomSet rays;
    std::vector<int> tight;  // inequality indices tight on every ray, ascending
    int e = 0;
    int t = 0;
};

// Action of (Z/mZ)^x: unit u sends coordinate index c to u*c mod m, which
// permutes the rays and the facets. Built only from a complete ray list;
// a missing image signals incomplete enumeration and is an internal error.
struct OrbitTable {
    std::vector<int> units;                    // ascending; units[0] == 1
    std::vector<std::vector<int>> ray_perm;    // [unit][ray] -> ray (0-based)
    std::vector<std::vector<int>> facet_perm;  // [unit][facet] -> facet
    std::vector<int> facet_orbit;              // facet -> orbit id, first-seen order
    int orbit_count = 0;
};

// A face passes the Wilf check if ANY enabled condition holds; "bad" means
// all enabled conditions fail and the face needs downstream inspection.
struct WilfFilters {
    bool two_e_ge_m = true;
    bool e_gt_t = true;
    bool three_e_ge_m = false;
};

struct BadOrbitCount {
    long long bad_orbits = 0;
    long long faces_visited = 0;       // faces actually classified after pruning
    std::vector<KunzFace> census;      // canonical representative per bad orbit
};

std::vector<KunzInequality> kunz_inequalities(int m);

// All extreme rays of C_m by exhaustive rank-(m-2) tight-subset solving.
// Guarded: multiplicities above `guard` (default 9) are refused; supply a
// ray file and kunz_model_from_rays for larger m.
std::vector<Ray> enumerate_rays(int m, int guard = 9);

// Build and self-verify a model. Verification rejects rays that are not
// primitive, not feasible, wrongly oriented, duplicated, or not extreme.
KunzModel kunz_model(int m, int guard = 9);
KunzModel kunz_model_from_rays(int m, std::vector<Ray> rays);

// The face-iterator input: atoms = rays, coatoms = facets.
LatticeInput kunz_input(const KunzModel& model);

std::pair<int, int> face_e_t(const KunzModel& model, const AtomSet& face_rays);
KunzFace classify_face(const KunzModel& model, const AtomSet& face_rays);

OrbitTable orbits(const KunzModel& model);

// Lexicographically minimal image of a ray set over all units.
AtomSet canonical_rays(const OrbitTable& table, const AtomSet& face_rays);

// Count bad faces up to the unit action: iterate the facets so each orbit's
// lexicographically first facet is visited and its mates are ignored, then
// classify every face visited, canonicalize the bad ones, and dedupe.
BadOrbitCount count_bad_orbits(const KunzModel& model, WilfFilters filters = {},
                               int max_tasks = 1);

// "e=<e> t=<t> tight=<i,j;...> rays=<ids>" with ids ascending, comma-separated
std::string census_line(const KunzModel& model, const KunzFace& face);

// Ray file: header "m <m> rays <count>", then one ray per line.
std::string ray_file_text(const KunzModel& model);
std::pair<int, std::vector<Ray>> parse_ray_file(const std::string& text);

} // namespace facelatt
