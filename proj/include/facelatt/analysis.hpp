#pragma once

// Derived quantities on top of the face stream: f-vectors, Hasse diagrams
// (cover relations), an independent closure-based face oracle, and the
// order-theoretic predicates (locally branched, atomic, coatomic) evaluated
// on an explicit face family.

#include "facelatt/iterator.hpp"
#include "facelatt/lattice_input.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace facelatt {

struct FVector {
    std::vector<long long> by_depth;  // index = emission depth (0 = coatom level)
    bool has_top = false;             // the artificial top record was emitted
    bool has_empty = false;           // the empty face occurs

    long long total() const;                  // includes the top record
    std::vector<long long> top_down() const;  // [1 if has_top] ++ by_depth
    std::string to_string() const;            // "(1, 4, 4, 1)"
    bool operator==(const FVector&) const = default;
};

FVector f_vector(const LatticeInput& in);

struct HasseDiagram {
    // levels[0] is the topmost level (the artificial top when emitted);
    // each level is sorted lexicographically. In the graded builder levels
    // are ranks and edges connect consecutive levels; the ungraded builder
    // buckets by emission depth and edges may jump levels.
    std::vector<std::vector<AtomSet>> levels;

    struct Edge {
        int upper_level, upper_index, lower_level, lower_index;
        auto operator<=>(const Edge&) const = default;
    };
    std::vector<Edge> edges;  // sorted, no duplicates

    size_t face_count() const;
    // global face id = offsets()[level] + index (level-major, top-down)
    std::vector<size_t> offsets() const;
};

/// Covers via depth ranks: face x covers y exactly when y = x ∩ coatom sits
/// one depth level deeper. Throws InputError when the depths do not grade
/// the lattice (an intersection lands on or above its face's level).
HasseDiagram cover_relations_graded(const LatticeInput& in);

/// Covers without rank assumptions: the lower covers of a face p are the
/// inclusion-maximal emitted faces among {p ∩ c ⊊ p : c coatom}. The face
/// list is materialized, guarded by max_faces (SizeGuardError).
HasseDiagram cover_relations_ungraded(const LatticeInput& in, long long max_faces = 1'000'000);

/// "<level sizes>\n" then one "u v" line per edge (upper id, lower id),
/// ids level-major top-down, edges sorted.
std::string hasse_to_edge_list(const HasseDiagram& h);
std::string hasse_to_json(const HasseDiagram& h);

/// Closure oracle: every face is an intersection of coatoms (plus the top).
/// Computes the full pairwise-intersection closure, then applies the
/// ignored filters. Returns the face set lex-sorted. Independent of the
/// stream implementation; O(|faces|^2)-ish, guarded by max_faces.
std::vector<AtomSet> brute_force_faces(const LatticeInput& in, long long max_faces = 2'000'000);

/// Run the stream and compare against brute_force_faces: same face set,
/// every non-top face exactly once, top record present exactly when asked.
struct CheckResult {
    bool ok = false;
    long long faces = 0;  // distinct faces (top included)
    std::string detail;   // first discrepancy, empty when ok
};
CheckResult check_against_closure(const LatticeInput& in, long long max_faces = 2'000'000);

/// Cover pairs (lower index, upper index) of an explicit family ordered by
/// inclusion. Quadratic-ish; meant for desk-scale families.
std::vector<std::pair<int, int>> cover_pairs(std::span<const AtomSet> faces);

/// Every length-2 chain a < b < c of covers spans an interval [a,c] with at
/// least 4 elements (i.e. b has company strictly between a and c).
bool is_locally_branched(std::span<const AtomSet> faces);

/// Every element is the join of the atoms below it. Throws InputError when
/// the family is not a lattice (missing joins/meets or no unique extremes).
bool is_atomic(std::span<const AtomSet> faces);

/// Every element is the meet of the coatoms above it. Same lattice check.
bool is_coatomic(std::span<const AtomSet> faces);

} // namespace facelatt
