// Command-line front end. Verbs: fvector, faces, hasse, check, gen, dual,
// kunz-rays, kunz-bad. Inputs come from a file argument or stdin ("-");
// exit codes: 0 ok, 1 bad input/validation, 2 size-guard refusal,
// 3 internal consistency failure.

#include "facelatt/analysis.hpp"
#include "facelatt/errors.hpp"
#include "facelatt/generators.hpp"
#include "facelatt/io.hpp"
#include "facelatt/iterator.hpp"
#include "facelatt/kunz.hpp"
#include "facelatt/lattice_input.hpp"
#include "facelatt/parallel.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace facelatt;

std::string slurp(const std::string& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw InputError("cannot open \"" + path + "\"");
        os << f.rdbuf();
    }
    return os.str();
}

struct CommonOpts {
    std::string input = "-";
    bool fix = false;
    bool lex_sort = false;
    std::string far_face;
    bool dual = false;
    bool no_top = false;
    int tasks = 1;
    bool stats = false;
    bool sorted = false;
};

void add_input_arg(CLI::App* sub, CommonOpts& o) {
    sub->add_option("input", o.input, "input file, or - for stdin")->capture_default_str();
}

void add_transform_flags(CLI::App* sub, CommonOpts& o) {
    sub->add_flag("--fix", o.fix, "repair duplicate/non-maximal coatoms instead of rejecting");
    sub->add_flag("--lex-sort", o.lex_sort, "sort coatoms and ignored sets lexicographically");
    sub->add_option("--far-face", o.far_face,
                    "restrict to faces missing these atoms (comma-separated ids)");
    sub->add_flag("--dual", o.dual, "swap the roles of atoms and coatoms first");
    sub->add_flag("--no-top", o.no_top, "suppress the artificial top record");
}

AtomSet parse_atom_list(const std::string& text, int n_atoms) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            ids.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad atom list \"" + text + "\": \"" + part + "\" is not an id");
        }
    }
    if (ids.empty()) throw InputError("bad atom list \"" + text + "\": no ids");
    for (int v : ids)
        if (v < 1 || v > n_atoms)
            throw InputError("atom id " + std::to_string(v) + " out of range 1.." +
                             std::to_string(n_atoms));
    return AtomSet::from_indices(n_atoms, ids);
}

// parse + the flag pipeline: fix, lex-sort, far-face, dual, no-top
ParsedInput load(const CommonOpts& o, bool allow_complex, bool check_on_parse = true) {
    ParsedInput p = parse_input(slurp(o.input), InputFormat::Auto,
                                check_on_parse && !o.fix);
    const bool transforms =
        o.fix || o.lex_sort || o.dual || o.no_top || !o.far_face.empty();
    if (p.is_complex) {
        if (!allow_complex)
            throw InputError("this verb needs a single lattice input, not a complex");
        if (transforms)
            throw InputError("transform flags do not apply to complex inputs");
        return p;
    }
    LatticeInput& in = p.inputs.front();
    if (o.fix) in = validate_and_fix(in);
    if (o.lex_sort) in = lex_sorted(in);
    if (!o.far_face.empty()) in = far_face_mode(in, parse_atom_list(o.far_face, in.n_atoms));
    if (o.dual) in = dualize(in);
    if (o.no_top) in.emit_top = false;
    return p;
}

void print_serial_stats(const IterStats& s, int peak_frames) {
    std::cerr << "n=" << s.n << " m=" << s.m << " alpha=" << s.alpha << " phi=" << s.phi
              << " max_depth=" << s.max_depth << " peak_frames=" << peak_frames << "\n";
}

std::string record_line(const FaceRecord& r) {
    std::ostringstream os;
    if (r.is_top)
        os << "top";
    else
        os << r.depth;
    for (int a : r.atoms.indices()) os << ' ' << a;
    return os.str();
}

void sort_records(std::vector<FaceRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const FaceRecord& a, const FaceRecord& b) {
        if (a.is_top != b.is_top) return a.is_top;
        if (a.depth != b.depth) return a.depth < b.depth;
        return lex_less(a.atoms, b.atoms);
    });
}

int cmd_fvector(const CommonOpts& o) {
    const ParsedInput p = load(o, /*allow_complex=*/true);
    std::vector<long long> combined;
    if (p.is_complex) {
        // cells share faces; each cell lattice starts at its own top, so the
        // per-cell level vectors add up aligned by codimension
        for (const LatticeInput& cell : complex_inputs(p.inputs)) {
            const std::vector<long long> td = f_vector(cell).top_down();
            if (combined.size() < td.size()) combined.resize(td.size(), 0);
            for (size_t i = 0; i < td.size(); ++i) combined[i] += td[i];
        }
    } else if (o.tasks > 1) {
        const ParallelRun run = run_parallel(p.inputs.front(), o.tasks);
        if (o.stats)
            std::cerr << "tasks=" << o.tasks << " phi_total=" << run.phi_total
                      << " max_depth=" << run.max_depth << "\n";
        FVector f;
        f.by_depth = run.depth_counts;
        f.has_top = run.top_count > 0;
        combined = f.top_down();
    } else {
        FaceStream fs(p.inputs.front());
        FVector f;
        while (fs.advance()) {
            if (fs.current_is_top()) {
                f.has_top = true;
                continue;
            }
            const size_t d = static_cast<size_t>(fs.current_depth());
            if (f.by_depth.size() <= d) f.by_depth.resize(d + 1, 0);
            ++f.by_depth[d];
        }
        if (o.stats) print_serial_stats(fs.stats(), fs.peak_live_frames());
        combined = f.top_down();
    }
    for (size_t i = 0; i < combined.size(); ++i)
        std::cout << (i ? " " : "") << combined[i];
    std::cout << "\n";
    return 0;
}

int cmd_faces(const CommonOpts& o) {
    const ParsedInput p = load(o, /*allow_complex=*/true);
    std::vector<LatticeInput> cells =
        p.is_complex ? complex_inputs(p.inputs) : p.inputs;

    if (o.sorted || o.tasks > 1) {
        std::vector<FaceRecord> records;
        long long phi_total = 0;
        int max_depth = 0;
        for (const LatticeInput& cell : cells) {
            ParallelRun run = run_parallel(cell, o.tasks, /*collect_records=*/true);
            records.insert(records.end(), std::make_move_iterator(run.records.begin()),
                           std::make_move_iterator(run.records.end()));
            phi_total += run.phi_total;
            max_depth = std::max(max_depth, run.max_depth);
        }
        if (o.stats)
            std::cerr << "tasks=" << o.tasks << " phi_total=" << phi_total
                      << " max_depth=" << max_depth << "\n";
        if (o.sorted) sort_records(records);
        for (const FaceRecord& r : records) std::cout << record_line(r) << "\n";
        return 0;
    }

    for (const LatticeInput& cell : cells) {
        FaceStream fs(cell);
        while (fs.advance()) std::cout << record_line(fs.current_record()) << "\n";
        if (o.stats) print_serial_stats(fs.stats(), fs.peak_live_frames());
    }
    return 0;
}

int cmd_hasse(const CommonOpts& o, bool ungraded, bool json, long long max_faces) {
    const ParsedInput p = load(o, /*allow_complex=*/false);
    const HasseDiagram h = ungraded ? cover_relations_ungraded(p.inputs.front(), max_faces)
                                    : cover_relations_graded(p.inputs.front());
    std::cout << (json ? hasse_to_json(h) : hasse_to_edge_list(h));
    return 0;
}

int cmd_check(const CommonOpts& o, bool oracle, long long max_faces) {
    // parse unchecked so the report can actually describe broken inputs
    const ParsedInput p = load(o, /*allow_complex=*/false, /*check_on_parse=*/false);
    const LatticeInput& in = p.inputs.front();
    const ValidationReport rep = validate(in);
    std::cout << rep.to_string();
    if (!rep.ok()) return 1;
    std::cout << "ok\n";
    if (!oracle) return 0;

    const CheckResult cr = check_against_closure(in, max_faces);
    if (cr.ok)
        std::cout << "oracle: ok, " << cr.faces << " faces match the closure\n";
    else
        std::cout << "oracle: MISMATCH, " << cr.detail << "\n";
    const std::vector<AtomSet> faces = brute_force_faces(in, max_faces);
    std::cout << "locally branched: " << (is_locally_branched(faces) ? "yes" : "no") << "\n";
    try {
        std::cout << "atomic: " << (is_atomic(faces) ? "yes" : "no") << "\n";
        std::cout << "coatomic: " << (is_coatomic(faces) ? "yes" : "no") << "\n";
    } catch (const InputError& e) {
        std::cout << e.what() << "\n";  // "not a lattice: ..." is a verdict, not a failure
    }
    return cr.ok ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::vector<int>& params) {
    const std::vector<LatticeInput> outs = generate(family, params);
    if (outs.size() == 1)
        std::cout << render_json(outs.front()) << "\n";
    else
        std::cout << render_json(outs) << "\n";
    return 0;
}

int cmd_dual(const CommonOpts& o, bool as_text) {
    const ParsedInput p = load(o, /*allow_complex=*/false);
    const LatticeInput d = dualize(p.inputs.front());
    if (as_text)
        std::cout << render_text(d);
    else
        std::cout << render_json(d) << "\n";
    return 0;
}

int cmd_kunz_rays(int m, int guard) {
    const KunzModel model = kunz_model(m, guard);
    for (const std::string& note : model.notes) std::cerr << note << "\n";
    std::cout << ray_file_text(model);
    return 0;
}

int cmd_kunz_bad(int m, const std::string& rays_file, const std::string& census_path,
                 const WilfFilters& filters, int guard, int tasks, bool stats) {
    KunzModel model = [&] {
        if (rays_file.empty()) return kunz_model(m, guard);
        auto [fm, rays] = parse_ray_file(slurp(rays_file));
        if (fm != m)
            throw InputError("ray file is for multiplicity " + std::to_string(fm) +
                             ", requested " + std::to_string(m));
        return kunz_model_from_rays(m, std::move(rays));
    }();
    for (const std::string& note : model.notes) std::cerr << note << "\n";

    const BadOrbitCount result = count_bad_orbits(model, filters, tasks);
    if (stats)
        std::cerr << "rays=" << model.rays.size() << " facets=" << model.facets.size()
                  << " faces_visited=" << result.faces_visited << "\n";
    if (!census_path.empty()) {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (census_path != "-") {
            file.open(census_path);
            if (!file) throw InputError("cannot write \"" + census_path + "\"");
            out = &file;
        }
        for (const KunzFace& face : result.census) *out << census_line(model, face) << "\n";
    }
    std::cout << "bad orbits: " << result.bad_orbits << "\n";
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"face iterator for locally branched lattices"};
    app.require_subcommand(1);

    CommonOpts o;

    CLI::App* fvector = app.add_subcommand("fvector", "print the level counts, top first");
    add_input_arg(fvector, o);
    add_transform_flags(fvector, o);
    fvector->add_option("--tasks", o.tasks, "split the run into up to N parallel tasks");
    fvector->add_flag("--stats", o.stats, "print iteration statistics to stderr");

    CLI::App* faces = app.add_subcommand("faces", "stream face records as \"depth atoms...\"");
    add_input_arg(faces, o);
    add_transform_flags(faces, o);
    faces->add_option("--tasks", o.tasks, "split the run into up to N parallel tasks");
    faces->add_flag("--stats", o.stats, "print iteration statistics to stderr");
    faces->add_flag("--sorted", o.sorted, "sort records (top, then depth, then atoms)");

    bool hasse_ungraded = false, hasse_json = false;
    long long hasse_max_faces = 1'000'000;
    CLI::App* hasse = app.add_subcommand("hasse", "print the cover-relation diagram");
    add_input_arg(hasse, o);
    add_transform_flags(hasse, o);
    hasse->add_flag("--ungraded", hasse_ungraded,
                    "use the inclusion-based builder (works when depths do not grade)");
    hasse->add_flag("--json", hasse_json, "emit JSON instead of the edge list");
    hasse->add_option("--max-faces", hasse_max_faces, "size guard for the ungraded builder");

    bool check_oracle = false;
    long long check_max_faces = 2'000'000;
    CLI::App* check = app.add_subcommand("check", "validate an input, optionally against oracles");
    add_input_arg(check, o);
    add_transform_flags(check, o);
    check->add_flag("--oracle", check_oracle,
                    "compare the stream to the closure oracle and print lattice verdicts");
    check->add_option("--max-faces", check_max_faces, "size guard for the oracle");

    std::string gen_family;
    std::vector<int> gen_params;
    CLI::App* gen = app.add_subcommand("gen", "emit a generated input as JSON");
    gen->add_option("family", gen_family, "one of: simplex, hypercube, cross_polytope, cyclic, "
                                          "rp2, uniform_matroid, nongraded_example, "
                                          "tight_span_example, complex_example")
        ->required();
    gen->add_option("params", gen_params, "integer parameters for the family");

    bool dual_text = false;
    CLI::App* dual = app.add_subcommand("dual", "swap atoms and coatoms, print the result");
    add_input_arg(dual, o);
    add_transform_flags(dual, o);
    dual->add_flag("--text", dual_text, "emit the line-based text format instead of JSON");

    int kunz_m = 0, kunz_guard = 9;
    CLI::App* krays = app.add_subcommand("kunz-rays", "enumerate extreme rays, print a ray file");
    krays->add_option("m", kunz_m, "multiplicity")->required();
    krays->add_option("--guard", kunz_guard, "largest multiplicity to enumerate internally");

    std::string kb_rays_file, kb_census;
    bool kb_no_2e = false, kb_no_et = false, kb_3e = false;
    CLI::App* kbad = app.add_subcommand("kunz-bad", "count bad face orbits of the cone");
    kbad->add_option("m", kunz_m, "multiplicity")->required();
    kbad->add_option("--rays-file", kb_rays_file, "read rays from a file instead of enumerating");
    kbad->add_option("--census", kb_census, "write one census line per bad orbit (- for stdout)");
    kbad->add_flag("--no-filter-2e", kb_no_2e, "disable the 2e >= m filter");
    kbad->add_flag("--no-filter-et", kb_no_et, "disable the e > t filter");
    kbad->add_flag("--filter-3e", kb_3e, "enable the 3e >= m filter");
    kbad->add_option("--guard", kunz_guard, "largest multiplicity to enumerate internally");
    kbad->add_option("--tasks", o.tasks, "run facet branches in up to N parallel tasks");
    kbad->add_flag("--stats", o.stats, "print ray/facet/visit counts to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // bad argv is an input error
    }

    if (fvector->parsed()) return cmd_fvector(o);
    if (faces->parsed()) return cmd_faces(o);
    if (hasse->parsed()) return cmd_hasse(o, hasse_ungraded, hasse_json, hasse_max_faces);
    if (check->parsed()) return cmd_check(o, check_oracle, check_max_faces);
    if (gen->parsed()) return cmd_gen(gen_family, gen_params);
    if (dual->parsed()) return cmd_dual(o, dual_text);
    if (krays->parsed()) return cmd_kunz_rays(kunz_m, kunz_guard);
    if (kbad->parsed())
        return cmd_kunz_bad(kunz_m, kb_rays_file, kb_census,
                            WilfFilters{!kb_no_2e, !kb_no_et, kb_3e}, kunz_guard, o.tasks,
                            o.stats);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
