#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mobpoly/boolfn.hpp"
#include "mobpoly/dag.hpp"
#include "mobpoly/errors.hpp"
#include "mobpoly/gridcount.hpp"
#include "mobpoly/io.hpp"
#include "mobpoly/lattice.hpp"

namespace mobpoly::cli {

namespace {

struct Usage {
    std::string msg;
};

long long env_ll(const char* name, long long def) {
    const char* v = std::getenv(name);
    if (!v || !*v) return def;
    try {
        return std::stoll(v);
    } catch (const std::exception&) {
        throw Usage{std::string("bad value in ") + name + ": '" + v + "'"};
    }
}

std::size_t env_size(const char* name, std::size_t def) {
    long long v = env_ll(name, static_cast<long long>(def));
    if (v < 0) throw Usage{std::string(name) + " must be non-negative"};
    return static_cast<std::size_t>(v);
}

int env_int(const char* name, int def) { return static_cast<int>(env_ll(name, def)); }

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage{"cannot open '" + path + "'"};
    return in;
}

Dag load_dag(const std::string& path, bool prune) {
    std::ifstream in = open_input(path);
    RawDigraph raw = io::read_digraph(in);
    return normalize(raw, prune);
}

void require_format(const std::string& format, bool csv_ok) {
    if (format == "csv" && !csv_ok) throw Usage{"csv output is not available here"};
}

nlohmann::ordered_json set_to_json(const Bitset& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int b : s.bits()) arr.push_back(b + 1);
    return arr;
}

nlohmann::ordered_json sets_to_json(const std::vector<Bitset>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Bitset& s : v) arr.push_back(set_to_json(s));
    return arr;
}

void emit_poly(std::ostream& out, const std::string& format, const MultilinearPoly& p) {
    if (format == "json") {
        out << io::poly_to_json(p) << "\n";
    } else if (format == "csv") {
        out << "coef,vars\n";
        for (const auto& [vars, coef] : p.terms)
            out << io::format_coef(coef) << "," << io::format_ids(vars, '*') << "\n";
    } else {
        io::write_poly_text(out, p);
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monotone-function polynomials, path-union lattices, grid growth bounds"};
    app.require_subcommand(1);

    std::size_t max_paths, max_family;
    int max_interp_n, max_dp_n, max_lower_d, max_upper_d, max_arcs, max_atoms;
    try {
        max_paths = env_size("MOBPOLY_MAX_PATHS", kMaxPaths);
        max_family = env_size("MOBPOLY_MAX_FAMILY", kMaxFamilySize);
        max_interp_n = env_int("MOBPOLY_MAX_INTERP_N", kMaxInterpolateVars);
        max_dp_n = env_int("MOBPOLY_MAX_DP_N", kMaxDpGrid);
        max_lower_d = env_int("MOBPOLY_MAX_LOWER_D", kMaxLowerWidth);
        max_upper_d = env_int("MOBPOLY_MAX_UPPER_D", kMaxUpperWidth);
        max_arcs = env_int("MOBPOLY_MAX_ORACLE_ARCS", kMaxOracleArcs);
        max_atoms = env_int("MOBPOLY_MAX_ATOMS", kMaxLatticeAtoms);
    } catch (const Usage& u) {
        err << "usage error: " << u.msg << "\n";
        return 2;
    }

    std::string path, format = "text", subset_text, kind, method = "dp", n_list_text;
    bool no_prune = false, matrix_free = false;
    int grid_n = 0, width_d = 0, report_max_n = 6;
    double tol = kDefaultSpectralTol;
    std::size_t cap = kDefaultIterationCap;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        if (with_format)
            sub->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"text", "json", "csv"}))
                ->capture_default_str();
    };
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", path, "input file")->required();
    };

    CLI::App* poly_dag = app.add_subcommand("poly-dag", "representing polynomial of s-t connectivity");
    add_file(poly_dag);
    add_common(poly_dag);
    poly_dag->add_flag("--no-prune", no_prune, "keep arcs on no s-t path");
    poly_dag->add_option("--max-family", max_family, "largest union family generated");
    poly_dag->add_option("--max-paths", max_paths, "largest path set enumerated");

    CLI::App* poly_table = app.add_subcommand("poly-table", "interpolating polynomial of a truth table");
    add_file(poly_table);
    add_common(poly_table);
    poly_table->add_option("--max-n", max_interp_n, "largest variable count interpolated");

    CLI::App* paths_cmd = app.add_subcommand("paths", "all s-t paths as arc-id sets");
    add_file(paths_cmd);
    add_common(paths_cmd);
    paths_cmd->add_flag("--no-prune", no_prune, "keep arcs on no s-t path");
    paths_cmd->add_option("--max-paths", max_paths, "largest path set enumerated");

    CLI::App* unions_cmd = app.add_subcommand("unions", "all unions of an antichain");
    add_file(unions_cmd);
    add_common(unions_cmd);
    unions_cmd->add_option("--max-family", max_family, "largest union family generated");

    CLI::App* ears_cmd = app.add_subcommand("ears", "ear decomposition of a union of paths");
    add_file(ears_cmd);
    add_common(ears_cmd);
    ears_cmd->add_flag("--no-prune", no_prune, "keep arcs on no s-t path");
    ears_cmd->add_option("--subset", subset_text, "arc ids forming the target set (default: all arcs)");
    ears_cmd->add_option("--max-paths", max_paths, "largest path set enumerated");

    CLI::App* verify_cmd = app.add_subcommand("verify", "compare against the truth-table oracle");
    add_file(verify_cmd);
    add_common(verify_cmd);
    verify_cmd->add_flag("--no-prune", no_prune, "keep arcs on no s-t path");
    verify_cmd->add_option("--max-arcs", max_arcs, "largest arc count sent to the oracle");

    CLI::App* dual_cmd = app.add_subcommand("dual", "representing polynomial of the dual function");
    add_file(dual_cmd);
    add_common(dual_cmd);
    dual_cmd->add_flag("--no-prune", no_prune, "keep arcs on no s-t path");
    dual_cmd->add_option("--max-arcs", max_arcs, "largest arc count sent to the oracle");

    CLI::App* synth_cmd = app.add_subcommand("lattice-synth", "prime implicants realizing an atomistic lattice");
    add_file(synth_cmd);
    add_common(synth_cmd);
    synth_cmd->add_option("--max-atoms", max_atoms, "largest atom count accepted");

    CLI::App* gcount = app.add_subcommand("grid-count", "exact |U(paths)| of the n x n grid");
    add_common(gcount);
    gcount->add_option("-n,--n", grid_n, "grid side")->required();
    gcount->add_option("--method", method, "counting method")
        ->check(CLI::IsMember({"dp", "brute", "paths"}))
        ->capture_default_str();
    gcount->add_option("--max-n", max_dp_n, "largest side accepted by the DP");
    gcount->add_option("--max-family", max_family, "largest union family generated");
    gcount->add_option("--max-paths", max_paths, "largest path set enumerated");

    CLI::App* gbound = app.add_subcommand("grid-bound", "spectral growth-base estimate");
    add_common(gbound);
    gbound->add_option("--kind", kind, "bound kind")
        ->check(CLI::IsMember({"lower", "upper"}))
        ->required();
    gbound->add_option("-d,--d", width_d, "strip width")->required();
    gbound->add_option("--tol", tol, "Rayleigh-quotient tolerance")->capture_default_str();
    gbound->add_option("--cap", cap, "iteration cap")->capture_default_str();
    gbound->add_flag("--matrix-free", matrix_free, "skip the dense upper matrix");
    gbound->add_option("--max-d", max_lower_d, "largest lower width accepted");
    gbound->add_option("--max-upper-d", max_upper_d, "largest upper width accepted");

    CLI::App* greport = app.add_subcommand("grid-report", "count and empirical base per side");
    add_common(greport);
    greport->add_option("-n,--n", report_max_n, "largest side (report covers 1..n)")
        ->capture_default_str();
    greport->add_option("--n-list", n_list_text, "explicit comma-separated sides");
    greport->add_option("--max-n", max_dp_n, "largest side accepted by the DP");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("mobpoly");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "usage error: " << e.what() << "\n";
            return 2;
        }

        if (app.got_subcommand(poly_dag)) {
            Dag g = load_dag(path, !no_prune);
            MultilinearPoly p = io::relabel_to_ids(g, dag_polynomial(g, max_family, max_paths));
            emit_poly(out, format, p);
        } else if (app.got_subcommand(poly_table)) {
            std::ifstream in = open_input(path);
            TruthTable t = io::read_truth_table(in);
            emit_poly(out, format, interpolate(t, max_interp_n));
        } else if (app.got_subcommand(paths_cmd)) {
            require_format(format, false);
            Dag g = load_dag(path, !no_prune);
            std::vector<Bitset> ps = enumerate_paths(g, max_paths);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["paths"] = nlohmann::ordered_json::array();
                for (const Bitset& p : ps) j["paths"].push_back(set_to_json(io::indices_to_ids(g, p)));
                out << j.dump(2) << "\n";
            } else {
                for (const Bitset& p : ps) out << io::format_ids(io::indices_to_ids(g, p)) << "\n";
            }
        } else if (app.got_subcommand(unions_cmd)) {
            require_format(format, false);
            std::ifstream in = open_input(path);
            io::FamilyFile f = io::read_family(in);
            UnionFamily u = unions(f.members, f.m, max_family);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["m"] = f.m;
                j["elements"] = sets_to_json(u.elements);
                out << j.dump(2) << "\n";
            } else {
                io::write_family(out, f.m, u.elements);
            }
        } else if (app.got_subcommand(ears_cmd)) {
            require_format(format, false);
            Dag g = load_dag(path, !no_prune);
            Bitset h = subset_text.empty()
                           ? g.full_arc_set()
                           : io::ids_to_indices(g, io::parse_ids(subset_text, io::max_arc_id(g)));
            std::vector<Bitset> chain = ear_decomposition(g, h);
            std::vector<Bitset> as_ids;
            for (const Bitset& c : chain) as_ids.push_back(io::indices_to_ids(g, c));
            if (format == "json") {
                nlohmann::ordered_json j;
                j["chain"] = sets_to_json(as_ids);
                out << j.dump(2) << "\n";
            } else {
                for (const Bitset& c : as_ids) out << io::format_ids(c) << "\n";
            }
        } else if (app.got_subcommand(verify_cmd)) {
            require_format(format, false);
            Dag g = load_dag(path, !no_prune);
            VerifyReport r = verify_against_oracle(g, max_arcs);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["ok"] = r.ok;
                j["paths"] = r.paths;
                j["lattice_elements_checked"] = r.family_size;
                j["detail"] = r.detail;
                out << j.dump(2) << "\n";
            } else {
                out << "paths: " << r.paths << "\n";
                out << "lattice elements checked: " << r.family_size << "\n";
                out << (r.ok ? "ok" : "mismatch") << "\n";
            }
            if (!r.ok) {
                err << "Mismatch: " << r.detail << "\n";
                return 1;
            }
        } else if (app.got_subcommand(dual_cmd)) {
            Dag g = load_dag(path, !no_prune);
            DualReport r = dual_polynomial(g, max_arcs);
            MultilinearPoly p = io::relabel_to_ids(g, r.poly);
            if (format == "json") {
                nlohmann::ordered_json j = nlohmann::ordered_json::parse(io::poly_to_json(p));
                j["coeffs_in_unit_range"] = r.coeffs_in_unit_range;
                out << j.dump(2) << "\n";
            } else {
                emit_poly(out, format, p);
                if (format == "text")
                    out << "coefficients in {-1,0,1}: " << (r.coeffs_in_unit_range ? "yes" : "no")
                        << "\n";
            }
        } else if (app.got_subcommand(synth_cmd)) {
            require_format(format, false);
            std::ifstream in = open_input(path);
            io::FamilyFile f = io::read_family(in);
            AtomisticLattice l(f.m, f.members, max_atoms);
            SynthesisResult s = synthesize_function(l);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["m"] = l.m;
                j["n"] = s.n;
                j["implicants"] = sets_to_json(s.implicants);
                j["kept"] = sets_to_json(s.kept);
                out << j.dump(2) << "\n";
            } else {
                io::write_family(out, s.n, s.implicants);
            }
        } else if (app.got_subcommand(gcount)) {
            mpz_class c;
            if (method == "brute") {
                c = count_unions_bruteforce(grid_n);
            } else if (method == "paths") {
                Dag g = grid(grid_n);
                c = static_cast<unsigned long>(
                    unions_of_paths(g, max_family, max_paths).elements.size());
            } else {
                c = count_unions_profile_dp(grid_n, max_dp_n);
            }
            if (format == "json") {
                nlohmann::ordered_json j;
                j["n"] = grid_n;
                j["method"] = method;
                j["count"] = c.get_str();
                out << j.dump(2) << "\n";
            } else if (format == "csv") {
                out << "n,count\n" << grid_n << "," << c.get_str() << "\n";
            } else {
                out << c.get_str() << "\n";
            }
        } else if (app.got_subcommand(gbound)) {
            GrowthEstimate e = kind == "lower"
                                   ? lower_bound_base(width_d, tol, cap, max_lower_d)
                                   : upper_bound_base(width_d, tol, matrix_free, cap, max_upper_d);
            if (format == "json")
                out << io::growth_estimate_json(e) << "\n";
            else if (format == "csv")
                out << io::growth_estimate_csv(e, true);
            else
                out << io::growth_estimate_text(e);
        } else if (app.got_subcommand(greport)) {
            std::vector<int> ns;
            if (!n_list_text.empty()) {
                std::istringstream ss(n_list_text);
                std::string piece;
                while (std::getline(ss, piece, ',')) {
                    try {
                        ns.push_back(std::stoi(piece));
                    } catch (const std::exception&) {
                        throw Usage{"bad side '" + piece + "' in --n-list"};
                    }
                }
                if (ns.empty()) throw Usage{"--n-list is empty"};
            } else {
                if (report_max_n < 1) throw Usage{"-n must be at least 1"};
                for (int n = 1; n <= report_max_n; ++n) ns.push_back(n);
            }
            std::vector<GrowthRow> rows = growth_report(ns, max_dp_n);
            if (format == "json")
                out << io::growth_rows_json(rows) << "\n";
            else if (format == "csv")
                out << io::growth_rows_csv(rows);
            else
                out << io::growth_rows_text(rows);
        }
        return 0;
    } catch (const Usage& u) {
        err << "usage error: " << u.msg << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace mobpoly::cli
