#include "facelatt/io.hpp"

#include "facelatt/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

using nlohmann::json;

namespace facelatt {

namespace {

AtomSet set_from_json(int n_atoms, const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of atom indices");
    std::vector<int> ix;
    ix.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number_integer())
            throw InputError(std::string(what) + " contains a non-integer entry");
        ix.push_back(e.get<int>());
    }
    return AtomSet::from_indices(n_atoms, ix);
}

LatticeInput input_from_json(const json& j) {
    if (!j.is_object()) throw InputError("expected a JSON object with n_atoms and coatoms");
    if (!j.contains("n_atoms") || !j["n_atoms"].is_number_integer())
        throw InputError("missing or non-integer \"n_atoms\"");
    LatticeInput in;
    in.n_atoms = j["n_atoms"].get<int>();
    if (in.n_atoms < 0) throw InputError("\"n_atoms\" must be non-negative");
    in.ignored_atoms = AtomSet(in.n_atoms);

    if (!j.contains("coatoms") || !j["coatoms"].is_array())
        throw InputError("missing or non-array \"coatoms\"");
    for (const json& c : j["coatoms"]) in.coatoms.push_back(set_from_json(in.n_atoms, c, "coatom"));

    if (j.contains("ignored_sets")) {
        if (!j["ignored_sets"].is_array()) throw InputError("\"ignored_sets\" must be an array");
        for (const json& s : j["ignored_sets"])
            in.ignored_sets.push_back(set_from_json(in.n_atoms, s, "ignored set"));
    }
    if (j.contains("ignored_atoms"))
        in.ignored_atoms = set_from_json(in.n_atoms, j["ignored_atoms"], "ignored_atoms");
    if (j.contains("emit_top")) {
        if (!j["emit_top"].is_boolean()) throw InputError("\"emit_top\" must be a boolean");
        in.emit_top = j["emit_top"].get<bool>();
    }
    if (j.contains("top")) in.top = set_from_json(in.n_atoms, j["top"], "top");

    for (auto& [key, val] : j.items()) {
        (void)val;
        if (key != "n_atoms" && key != "coatoms" && key != "ignored_sets" &&
            key != "ignored_atoms" && key != "emit_top" && key != "top")
            throw InputError("unknown key \"" + key + "\" in input object");
    }
    return in;
}

// One text line -> list of 1-based indices; "." alone is the empty set.
std::vector<int> parse_index_line(const std::string& line, int lineno) {
    std::vector<int> ix;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok == ".") {
            if (!ix.empty()) throw InputError("line " + std::to_string(lineno) +
                                              ": \".\" must stand alone");
            continue;
        }
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            ix.push_back(v);
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(lineno) + ": bad atom index \"" + tok + "\"");
        }
    }
    return ix;
}

LatticeInput input_from_text(const std::string& text) {
    LatticeInput in;
    bool have_n = false;
    bool top_none = false;
    std::optional<std::vector<int>> top_ix;

    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::string body = line.substr(first);

        if (body[0] == '#') {
            // comments, except for the top directive
            std::string rest = body.substr(1);
            size_t p = rest.find_first_not_of(" \t");
            if (p != std::string::npos && rest.compare(p, 4, "top:") == 0) {
                std::string arg = rest.substr(p + 4);
                size_t a = arg.find_first_not_of(" \t\r");
                if (a != std::string::npos && arg.compare(a, 4, "none") == 0)
                    top_none = true;
                else
                    top_ix = parse_index_line(arg, lineno);
            }
            continue;
        }
        if (!have_n) {
            std::vector<int> ix = parse_index_line(body, lineno);
            if (ix.size() != 1 || ix[0] < 0)
                throw InputError("line " + std::to_string(lineno) +
                                 ": expected the atom count on the first data line");
            in.n_atoms = ix[0];
            in.ignored_atoms = AtomSet(in.n_atoms);
            have_n = true;
            continue;
        }
        if (body[0] == '!') {
            in.ignored_sets.push_back(
                AtomSet::from_indices(in.n_atoms, parse_index_line(body.substr(1), lineno)));
        } else if (body[0] == '~') {
            AtomSet more =
                AtomSet::from_indices(in.n_atoms, parse_index_line(body.substr(1), lineno));
            in.ignored_atoms = in.ignored_atoms | more;
        } else {
            in.coatoms.push_back(
                AtomSet::from_indices(in.n_atoms, parse_index_line(body, lineno)));
        }
    }
    if (!have_n) throw InputError("empty input: no atom count line");
    // the two directives carry independent fields: "# top: none" clears the
    // emission flag, "# top: i j k" designates the value; both may appear
    if (top_none) in.emit_top = false;
    if (top_ix) in.top = AtomSet::from_indices(in.n_atoms, *top_ix);
    return in;
}

json set_to_json(const AtomSet& s) {
    json a = json::array();
    for (int ix : s.indices()) a.push_back(ix);
    return a;
}

json input_to_json(const LatticeInput& in) {
    json j;
    j["n_atoms"] = in.n_atoms;
    json co = json::array();
    for (const AtomSet& c : in.coatoms) co.push_back(set_to_json(c));
    j["coatoms"] = std::move(co);
    if (!in.ignored_sets.empty()) {
        json ig = json::array();
        for (const AtomSet& s : in.ignored_sets) ig.push_back(set_to_json(s));
        j["ignored_sets"] = std::move(ig);
    }
    if (!in.ignored_atoms.empty()) j["ignored_atoms"] = set_to_json(in.ignored_atoms);
    if (!in.emit_top) j["emit_top"] = false;
    if (in.top) j["top"] = set_to_json(*in.top);
    return j;
}

void check_or_throw(const LatticeInput& in, size_t cell, bool is_complex) {
    ValidationReport rep = validate(in);
    if (rep.ok()) return;
    std::string where = is_complex ? "cell " + std::to_string(cell + 1) + ": " : "";
    throw InputError(where + "invalid input:\n" + rep.to_string());
}

} // namespace

ParsedInput parse_input(const std::string& text, InputFormat format, bool check) {
    if (format == InputFormat::Auto) {
        size_t first = text.find_first_not_of(" \t\r\n");
        char c = first == std::string::npos ? '\0' : text[first];
        format = (c == '{' || c == '[') ? InputFormat::Json : InputFormat::Text;
    }

    ParsedInput out;
    if (format == InputFormat::Text) {
        out.inputs.push_back(input_from_text(text));
    } else {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw InputError(std::string("JSON parse error: ") + e.what());
        }
        if (j.is_array()) {
            out.is_complex = true;
            if (j.empty()) throw InputError("complex input has no cells");
            for (const json& cell : j) out.inputs.push_back(input_from_json(cell));
        } else {
            out.inputs.push_back(input_from_json(j));
        }
    }
    if (check)
        for (size_t i = 0; i < out.inputs.size(); ++i)
            check_or_throw(out.inputs[i], i, out.is_complex);
    return out;
}

std::string render_json(const LatticeInput& in) { return input_to_json(in).dump(2) + "\n"; }

std::string render_json(const std::vector<LatticeInput>& cells) {
    json arr = json::array();
    for (const LatticeInput& c : cells) arr.push_back(input_to_json(c));
    return arr.dump(2) + "\n";
}

std::string render_text(const LatticeInput& in) {
    std::ostringstream os;
    os << in.n_atoms << "\n";
    auto write_set = [&os](const AtomSet& s, const char* prefix) {
        os << prefix;
        std::vector<int> ix = s.indices();
        if (ix.empty()) {
            os << (*prefix ? " ." : ".");
        } else {
            for (size_t i = 0; i < ix.size(); ++i) os << (i || *prefix ? " " : "") << ix[i];
        }
        os << "\n";
    };
    for (const AtomSet& c : in.coatoms) write_set(c, "");
    for (const AtomSet& s : in.ignored_sets) write_set(s, "!");
    if (!in.ignored_atoms.empty()) write_set(in.ignored_atoms, "~");
    if (!in.emit_top) os << "# top: none\n";
    if (in.top) {
        os << "# top:";
        for (int ix : in.top->indices()) os << " " << ix;
        os << "\n";
    }
    return os.str();
}

} // namespace facelatt
