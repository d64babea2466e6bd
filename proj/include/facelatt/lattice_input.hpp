#pragma once

// Iteration inputs and the structural transforms on them: validation,
// dualization (transposing the coatom-atom incidence), far-face restriction
// for unbounded polyhedra, and the chaining that turns a list of polyhedral
// complex cells into per-cell inputs whose outputs concatenate without
// duplicates.

#include "facelatt/atomset.hpp"

#include <optional>
#include <vector>

namespace facelatt {

struct LatticeInput {
    int n_atoms = 0;
    std::vector<AtomSet> coatoms;
    std::vector<AtomSet> ignored_sets;  // skip faces contained in any of these
    AtomSet ignored_atoms;              // skip *emission* of faces meeting these
    bool emit_top = true;               // emit the artificial top before iterating

    // Designated top emitted instead of the union of coatoms. Set by
    // complex_inputs when coatom filtering makes the union fall short of the
    // cell's actual top face; absent for ordinary inputs.
    std::optional<AtomSet> top;

    AtomSet top_face() const {
        if (top) return *top;
        AtomSet u(n_atoms);
        for (const AtomSet& c : coatoms) u = u | c;
        return u;
    }
};

struct ValidationIssue {
    std::string code;     // stable machine-readable tag
    std::string message;  // human-readable detail
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;

    bool ok() const { return errors.empty(); }
    std::string to_string() const;
};

/// Check the input contract. Errors: capacity mismatches anywhere,
/// duplicate coatoms, a coatom contained in another coatom, a coatom
/// contained in an ignored set. Warning: an atom that appears in no coatom.
ValidationReport validate(const LatticeInput& in);

/// Repair what validate() flags: drop duplicate and non-maximal coatoms and
/// coatoms contained in an ignored set (first occurrence wins, order kept).
/// Capacity mismatches are not repairable and still throw InputError.
LatticeInput validate_and_fix(const LatticeInput& in);

/// Sort the coatoms lexicographically (canonical order); opt-in, input
/// order is preserved everywhere else.
LatticeInput lex_sorted(const LatticeInput& in);

/// Transpose the incidence: atoms of the result are the input's coatoms (in
/// list order) and coatom j of the result collects the input coatoms
/// containing input atom j. Ignored sets must each equal some coatom; they
/// turn into ignored atoms of the result (iterating the opposite lattice
/// while avoiding everything above those elements). Requires ignored_atoms
/// empty and no designated top.
LatticeInput dualize(const LatticeInput& in);

/// Restrict to faces not lying in the far face: appends `far_face` to
/// ignored_sets and drops coatoms contained in it.
LatticeInput far_face_mode(const LatticeInput& in, const AtomSet& far_face);

/// Chain complex cells so the concatenated runs emit each face once: cell k
/// gets the tops of cells 1..k-1 prepended to its ignored sets, coatoms
/// contained in an earlier top are dropped, and the cell's top face is
/// pinned (designated top) so it is still emitted whole.
std::vector<LatticeInput> complex_inputs(const std::vector<LatticeInput>& cells);

} // namespace facelatt
