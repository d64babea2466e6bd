#pragma once

// Reading and writing iteration inputs.
//
// Two formats, auto-detected on read:
//
//   JSON   {"n_atoms": 4, "coatoms": [[1,2],[2,3]], "ignored_sets": [[4]],
//           "ignored_atoms": [3], "emit_top": true, "top": [1,2,3]}
//          Everything but n_atoms and coatoms is optional. A top-level
//          array of such objects is a polyhedral complex (one cell each).
//
//   text   line 1: atom count; each further line: the 1-based atoms of one
//          coatom. "!" prefixes an ignored set, "~" prefixes the ignored
//          atoms, "#" starts a comment. A lone "." is the empty set. The
//          directives "# top: 1 2 3" and "# top: none" pin the designated
//          top / suppress the top record.
//
// Atom lists are 1-based in both formats.

#include "facelatt/lattice_input.hpp"

#include <string>
#include <vector>

namespace facelatt {

enum class InputFormat { Auto, Json, Text };

struct ParsedInput {
    std::vector<LatticeInput> inputs;  // one entry unless is_complex
    bool is_complex = false;
};

/// Parse one input (or a complex cell list) from text. check=true runs
/// validate() on each input and throws InputError on contract violations;
/// check=false defers that to the caller (e.g. before validate_and_fix).
ParsedInput parse_input(const std::string& text, InputFormat format = InputFormat::Auto,
                        bool check = true);

std::string render_json(const LatticeInput& in);
std::string render_json(const std::vector<LatticeInput>& cells);  // complex
std::string render_text(const LatticeInput& in);

} // namespace facelatt
