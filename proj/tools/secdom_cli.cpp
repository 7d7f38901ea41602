#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "secdom/construct.hpp"
#include "secdom/errors.hpp"
#include "secdom/family.hpp"
#include "secdom/formulas.hpp"
#include "secdom/graph.hpp"
#include "secdom/solve.hpp"
#include "secdom/structure.hpp"
#include "secdom/verify.hpp"
#include "secdom/vertex_set.hpp"

namespace {

using nlohmann::ordered_json;
using namespace secdom;

constexpr int kExitMismatch = 1; // verify false, audit violations, table mismatch
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One graph source per command: --family NAME --n N, or --graph FILE.
struct GraphSource {
    std::string family_name;
    int n = 0;
    std::string graph_path;

    void add_options(CLI::App* cmd, bool required = true) {
        auto* fam = cmd->add_option("--family", family_name, "family name: p2xpn p2xcn m2n p3xpn p3xcn");
        auto* nopt = cmd->add_option("--n", n, "number of copies");
        auto* file = cmd->add_option("--graph", graph_path, "edge-list file");
        nopt->needs(fam);
        fam->needs(nopt);
        file->excludes(fam);
        if (required) {
            // one of the two must be given; checked in resolve()
        }
    }

    bool has_family() const { return !family_name.empty(); }
    bool has_graph() const { return !graph_path.empty(); }

    FamilyInstance instance() const {
        auto fam = parse_family(family_name);
        if (!fam)
            throw UsageError("unknown family: " + family_name);
        return FamilyInstance{*fam, n};
    }

    Graph load() const {
        if (has_family())
            return build_family(instance());
        if (!has_graph())
            throw UsageError("a graph source is required: --family/--n or --graph");
        std::ifstream in(graph_path);
        if (!in)
            throw IoError("cannot open " + graph_path);
        return parse_graph(in);
    }
};

VertexSet load_set(const std::string& path, int universe) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    return parse_vertex_set(in, universe);
}

std::string ids_line(const VertexSet& s) {
    std::string out;
    for (size_t i = 0; i < s.members().size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(s.members()[i]);
    }
    return out;
}

ordered_json ids_json(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (int v : s.members())
        arr.push_back(v);
    return arr;
}

// ---- gamma ----------------------------------------------------------------

struct GammaArgs {
    GraphSource source;
    std::string method; // formula | solver | oracle; default depends on source
    bool witness = false;
    std::string format = "tsv";
};

int run_gamma(const GammaArgs& args) {
    std::string method = args.method;
    if (method.empty())
        method = args.source.has_family() ? "formula" : "solver";

    int value = 0;
    std::string case_label;
    std::optional<VertexSet> witness;

    if (method == "formula") {
        if (!args.source.has_family())
            throw UsageError("--method formula needs --family/--n");
        if (args.witness)
            throw UsageError("--witness needs --method solver or oracle");
        const FormulaResult r = gamma_s_formula(args.source.instance());
        value = r.value;
        case_label = r.case_label;
    } else if (method == "solver" || method == "oracle") {
        const Graph g = args.source.load();
        SolveResult result = method == "solver"
                                 ? solve_gamma_s(g)
                                 : brute_force_gamma_s(g).value(); // no max_size: always solves
        value = result.optimum;
        if (args.witness)
            witness = std::move(result.witness);
    } else {
        throw UsageError("unknown method: " + method);
    }

    if (args.format == "json") {
        ordered_json out;
        if (args.source.has_family()) {
            out["family"] = args.source.family_name;
            out["n"] = args.source.n;
        }
        out["method"] = method;
        out["value"] = value;
        if (!case_label.empty())
            out["case"] = case_label;
        if (witness)
            out["witness"] = ids_json(*witness);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value << "\n";
        if (witness)
            std::cout << ids_line(*witness) << "\n";
    }
    return 0;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const GraphSource& source, const std::string& set_path, const std::string& format) {
    const Graph g = source.load();
    const VertexSet s = load_set(set_path, g.vertex_count());
    const CertificateResult result = certificate(g, s);
    if (format == "json") {
        ordered_json out;
        out["secure_dominating"] = result.ok();
        if (!result.ok())
            out["unguardable"] = result.first_unguardable;
        std::cout << out.dump() << "\n";
    } else if (result.ok()) {
        std::cout << "true\n";
    } else {
        std::cout << "false " << result.first_unguardable << "\n";
    }
    return result.ok() ? 0 : kExitMismatch;
}

// ---- construct ------------------------------------------------------------

int run_construct(const GraphSource& source) {
    if (!source.has_family())
        throw UsageError("construct needs --family/--n");
    const FamilyInstance inst = source.instance();
    const VertexSet s = construct_optimal(inst);
    ordered_json out;
    out["family"] = std::string(family_name(inst.family));
    out["n"] = inst.n;
    out["size"] = s.size();
    ordered_json vertices = ordered_json::array();
    for (int id : s.members())
        vertices.push_back(ordered_json::array({inst.copy_of(id), inst.row_of(id)}));
    out["vertices"] = vertices;
    out["ids"] = ids_json(s);
    std::cout << out.dump() << "\n";
    return 0;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
    std::string family_name;
    int from = 0;
    int to = 0;
    std::string check = "none"; // none | solver
    std::string format = "tsv";
};

int run_table(const TableArgs& args) {
    auto fam = parse_family(args.family_name);
    if (!fam)
        throw UsageError("unknown family: " + args.family_name);
    if (args.check != "none" && args.check != "solver")
        throw UsageError("unknown check: " + args.check);
    if (args.to < args.from)
        throw UsageError("--to must be at least --from");

    bool all_match = true;
    for (int n = args.from; n <= args.to; ++n) {
        const FamilyInstance inst{*fam, n};
        const FormulaResult formula = gamma_s_formula(inst);

        std::optional<int> construct_size;
        bool construct_ok = true;
        if (inst.family != Family::p3xpn) {
            const VertexSet s = construct_optimal(inst);
            construct_size = s.size();
            construct_ok = is_secure_dominating(build_family(inst), s) &&
                           s.size() == expected_construction_size(inst);
        }

        std::optional<int> solver_value;
        bool solver_ok = true;
        if (args.check == "solver") {
            const SolveResult result = solve_gamma_s(build_family(inst));
            solver_value = result.optimum;
            solver_ok = result.optimum == formula.value;
        }

        const bool match = construct_ok && solver_ok;
        all_match = all_match && match;

        if (args.format == "json") {
            ordered_json row;
            row["family"] = args.family_name;
            row["n"] = n;
            row["formula"] = formula.value;
            row["case"] = formula.case_label;
            if (construct_size)
                row["construct"] = *construct_size;
            if (solver_value)
                row["solver"] = *solver_value;
            row["match"] = match;
            std::cout << row.dump() << "\n";
        } else {
            std::cout << n << "\t" << formula.value << "\t"
                      << (construct_size ? std::to_string(*construct_size) : "-") << "\t"
                      << (solver_value ? std::to_string(*solver_value) : "-") << "\t"
                      << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    }
    return all_match ? 0 : kExitMismatch;
}

// ---- enumerate ------------------------------------------------------------

int run_enumerate(const GraphSource& source, int size, const std::string& format) {
    const Graph g = source.load();
    for (const VertexSet& s : enumerate_secure_sets(g, size)) {
        if (format == "json")
            std::cout << ids_json(s).dump() << "\n";
        else
            std::cout << ids_line(s) << "\n";
    }
    return 0;
}

// ---- audit ----------------------------------------------------------------

struct AuditArgs {
    GraphSource source;
    std::string pattern;
    bool window111111 = false;
    bool type1_blocks = false;
    std::string sizes; // "A:B" or single "K"
    int size = -1;
};

std::pair<int, int> parse_sizes(const AuditArgs& args, int vertex_count) {
    if (args.size >= 0)
        return {args.size, args.size};
    if (args.sizes.empty())
        return {0, vertex_count};
    std::istringstream ss(args.sizes);
    int lo = 0, hi = 0;
    char sep = 0;
    if (ss >> lo) {
        if (ss >> sep >> hi && sep == ':' && ss.eof())
            return {lo, hi};
        if (ss.eof())
            return {lo, lo};
    }
    throw UsageError("bad --sizes, expected A:B or K");
}

int run_audit(const AuditArgs& args) {
    if (!args.source.has_family())
        throw UsageError("audit needs --family/--n");
    const FamilyInstance inst = args.source.instance();
    const int kinds = (!args.pattern.empty()) + args.window111111 + args.type1_blocks;
    if (kinds != 1)
        throw UsageError("pick exactly one of --pattern, --window111111, --type1-blocks");

    const auto [lo, hi] = parse_sizes(args, inst.vertex_count());
    std::vector<AuditViolation> violations;
    if (!args.pattern.empty()) {
        violations = audit_forbidden_pattern(inst, lo, hi, args.pattern);
    } else if (args.window111111) {
        violations = audit_111111(inst, lo, hi);
    } else {
        if (lo != hi)
            throw UsageError("--type1-blocks needs a single --size");
        violations = audit_type1_block_lengths(inst, lo);
    }

    for (const AuditViolation& violation : violations) {
        ordered_json row;
        row["n"] = violation.n;
        row["size"] = violation.size;
        row["set"] = ids_json(violation.set);
        row["pattern"] = violation.pattern;
        row["position"] = violation.position;
        std::cout << row.dump() << "\n";
    }
    std::cout << "violations: " << violations.size() << "\n";
    return violations.empty() ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"secure dominating sets on products of small graphs with paths and cycles"};
    app.require_subcommand(1);

    GammaArgs gamma_args;
    auto* gamma_cmd = app.add_subcommand("gamma", "compute the secure domination number");
    gamma_args.source.add_options(gamma_cmd);
    gamma_cmd->add_option("--method", gamma_args.method, "formula | solver | oracle");
    gamma_cmd->add_flag("--witness", gamma_args.witness, "also print an optimal set");
    gamma_cmd->add_option("--format", gamma_args.format, "tsv | json");

    GraphSource verify_source;
    std::string verify_set_path, verify_format = "tsv";
    auto* verify_cmd = app.add_subcommand("verify", "check a set for secure domination");
    verify_source.add_options(verify_cmd);
    verify_cmd->add_option("--set", verify_set_path, "vertex-set file")->required();
    verify_cmd->add_option("--format", verify_format, "tsv | json");

    GraphSource construct_source;
    auto* construct_cmd = app.add_subcommand("construct", "build the pattern-based optimal set");
    construct_source.add_options(construct_cmd);

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand("table", "tabulate formula / construction / solver values");
    table_cmd->add_option("--family", table_args.family_name)->required();
    table_cmd->add_option("--from", table_args.from)->required();
    table_cmd->add_option("--to", table_args.to)->required();
    table_cmd->add_option("--check", table_args.check, "none | solver");
    table_cmd->add_option("--format", table_args.format, "tsv | json");

    GraphSource enum_source;
    int enum_size = 0;
    std::string enum_format = "tsv";
    auto* enum_cmd = app.add_subcommand("enumerate", "list all secure dominating sets of a size");
    enum_source.add_options(enum_cmd);
    enum_cmd->add_option("--size", enum_size)->required();
    enum_cmd->add_option("--format", enum_format, "tsv | json");

    AuditArgs audit_args;
    auto* audit_cmd = app.add_subcommand("audit", "audit structural rules over enumerated sets");
    audit_args.source.add_options(audit_cmd);
    audit_cmd->add_option("--pattern", audit_args.pattern, "forbidden type pattern, digits 0..3");
    audit_cmd->add_flag("--window111111", audit_args.window111111,
                        "six-consecutive-type-1 window rule and all-type-1 residue rule");
    audit_cmd->add_flag("--type1-blocks", audit_args.type1_blocks,
                        "type-1 block lengths must be 4 or 5");
    audit_cmd->add_option("--sizes", audit_args.sizes, "size range A:B");
    audit_cmd->add_option("--size", audit_args.size, "single size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gamma_cmd->parsed())
            return run_gamma(gamma_args);
        if (verify_cmd->parsed())
            return run_verify(verify_source, verify_set_path, verify_format);
        if (construct_cmd->parsed())
            return run_construct(construct_source);
        if (table_cmd->parsed())
            return run_table(table_args);
        if (enum_cmd->parsed())
            return run_enumerate(enum_source, enum_size, enum_format);
        if (audit_cmd->parsed())
            return run_audit(audit_args);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidSizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedFamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotApplicableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
