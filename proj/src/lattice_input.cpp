#include "facelatt/lattice_input.hpp"

#include <algorithm>
#include <unordered_set>

namespace facelatt {

std::string ValidationReport::to_string() const {
    std::string s;
    for (const auto& e : errors) s += "error[" + e.code + "]: " + e.message + "\n";
    for (const auto& w : warnings) s += "warning[" + w.code + "]: " + w.message + "\n";
    return s;
}

ValidationReport validate(const LatticeInput& in) {
    ValidationReport rep;
    auto err = [&](std::string code, std::string msg) {
        rep.errors.push_back({std::move(code), std::move(msg)});
    };

    if (in.n_atoms < 0) err("bad_capacity", "n_atoms must be non-negative");

    bool capacity_ok = true;
    auto check_cap = [&](const AtomSet& s, const char* what, size_t ix) {
        if (s.capacity() != in.n_atoms) {
            err("capacity_mismatch", std::string(what) + " " + std::to_string(ix + 1) +
                                         " has capacity " + std::to_string(s.capacity()) +
                                         ", expected " + std::to_string(in.n_atoms));
            capacity_ok = false;
        }
    };
    for (size_t i = 0; i < in.coatoms.size(); ++i) check_cap(in.coatoms[i], "coatom", i);
    for (size_t i = 0; i < in.ignored_sets.size(); ++i) check_cap(in.ignored_sets[i], "ignored_set", i);
    if (in.ignored_atoms.capacity() != in.n_atoms) {
        err("capacity_mismatch", "ignored_atoms has capacity " +
                                     std::to_string(in.ignored_atoms.capacity()) + ", expected " +
                                     std::to_string(in.n_atoms));
        capacity_ok = false;
    }
    if (in.top && in.top->capacity() != in.n_atoms) {
        err("capacity_mismatch", "designated top has capacity " +
                                     std::to_string(in.top->capacity()));
        capacity_ok = false;
    }
    if (!capacity_ok) return rep; // containment checks below would throw

    for (size_t i = 0; i < in.coatoms.size(); ++i) {
        for (size_t j = 0; j < in.coatoms.size(); ++j) {
            if (i == j) continue;
            if (in.coatoms[i] == in.coatoms[j]) {
                if (i < j)
                    err("duplicate_coatom", "coatoms " + std::to_string(i + 1) + " and " +
                                                std::to_string(j + 1) + " are both " +
                                                in.coatoms[i].to_string());
            } else if (in.coatoms[i].is_subset_of(in.coatoms[j])) {
                err("coatom_in_coatom", "coatom " + std::to_string(i + 1) + " " +
                                            in.coatoms[i].to_string() + " is contained in coatom " +
                                            std::to_string(j + 1) + " " + in.coatoms[j].to_string());
            }
        }
        for (size_t j = 0; j < in.ignored_sets.size(); ++j) {
            if (in.coatoms[i].is_subset_of(in.ignored_sets[j]))
                err("coatom_in_ignored", "coatom " + std::to_string(i + 1) + " " +
                                             in.coatoms[i].to_string() +
                                             " is contained in ignored set " +
                                             std::to_string(j + 1));
        }
    }

    AtomSet covered(in.n_atoms);
    for (const AtomSet& c : in.coatoms) covered = covered | c;
    for (int a = 1; a <= in.n_atoms; ++a) {
        if (!covered.contains(a))
            rep.warnings.push_back({"atom_unused",
                                    "atom " + std::to_string(a) + " appears in no coatom"});
    }
    return rep;
}

LatticeInput validate_and_fix(const LatticeInput& in) {
    for (const AtomSet& s : in.coatoms)
        if (s.capacity() != in.n_atoms)
            throw InputError("capacity mismatch in coatoms is not repairable");
    for (const AtomSet& s : in.ignored_sets)
        if (s.capacity() != in.n_atoms)
            throw InputError("capacity mismatch in ignored_sets is not repairable");
    if (in.ignored_atoms.capacity() != in.n_atoms)
        throw InputError("capacity mismatch in ignored_atoms is not repairable");

    LatticeInput out = in;
    out.coatoms.clear();
    for (size_t i = 0; i < in.coatoms.size(); ++i) {
        const AtomSet& c = in.coatoms[i];
        bool keep = !c.is_subset_of_any(in.ignored_sets);
        for (size_t j = 0; keep && j < in.coatoms.size(); ++j) {
            if (i == j) continue;
            if (c == in.coatoms[j]) keep = j > i; // first duplicate survives
            else if (c.is_subset_of(in.coatoms[j])) keep = false;
        }
        if (keep) out.coatoms.push_back(c);
    }
    return out;
}

LatticeInput lex_sorted(const LatticeInput& in) {
    LatticeInput out = in;
    std::stable_sort(out.coatoms.begin(), out.coatoms.end(), lex_less);
    return out;
}

LatticeInput dualize(const LatticeInput& in) {
    if (!in.ignored_atoms.empty())
        throw InputError("dualize requires empty ignored_atoms");
    if (in.top)
        throw InputError("dualize does not support a designated top");

    const int dual_n = static_cast<int>(in.coatoms.size());
    std::vector<int> ignored_ix;
    for (const AtomSet& g : in.ignored_sets) {
        int found = -1;
        for (int i = 0; i < dual_n; ++i)
            if (in.coatoms[static_cast<size_t>(i)] == g) { found = i; break; }
        if (found < 0)
            throw InputError("dualize: ignored set " + g.to_string() +
                             " is not one of the coatoms");
        ignored_ix.push_back(found + 1);
    }

    LatticeInput out;
    out.n_atoms = dual_n;
    out.emit_top = in.emit_top;
    out.ignored_atoms = AtomSet::from_indices(dual_n, ignored_ix);
    out.coatoms.reserve(static_cast<size_t>(in.n_atoms));
    for (int a = 1; a <= in.n_atoms; ++a) {
        std::vector<int> members;
        for (int i = 0; i < dual_n; ++i)
            if (in.coatoms[static_cast<size_t>(i)].contains(a)) members.push_back(i + 1);
        out.coatoms.push_back(AtomSet::from_indices(dual_n, members));
    }
    return out;
}

LatticeInput far_face_mode(const LatticeInput& in, const AtomSet& far_face) {
    if (far_face.capacity() != in.n_atoms)
        throw InputError("far face capacity mismatch");
    LatticeInput out = in;
    out.coatoms.clear();
    for (const AtomSet& c : in.coatoms)
        if (!c.is_subset_of(far_face)) out.coatoms.push_back(c);
    out.ignored_sets.push_back(far_face);
    return out;
}

std::vector<LatticeInput> complex_inputs(const std::vector<LatticeInput>& cells) {
    std::vector<LatticeInput> out;
    std::vector<AtomSet> earlier_tops;
    for (const LatticeInput& cell : cells) {
        AtomSet cell_top = cell.top_face();
        LatticeInput adjusted = cell;
        adjusted.coatoms.clear();
        for (const AtomSet& c : cell.coatoms)
            if (!c.is_subset_of_any(earlier_tops)) adjusted.coatoms.push_back(c);
        // Earlier tops go first, mirroring the order faces were consumed.
        std::vector<AtomSet> ign = earlier_tops;
        ign.insert(ign.end(), cell.ignored_sets.begin(), cell.ignored_sets.end());
        adjusted.ignored_sets = std::move(ign);
        adjusted.top = cell_top; // survives coatom filtering
        out.push_back(std::move(adjusted));
        earlier_tops.push_back(std::move(cell_top));
    }
    return out;
}

} // namespace facelatt
