// Command line front end: instance files in, decomposition/verification
// reports and DOT diagrams out, plus seeded random-instance generation.
//
// Exit codes: 0 ok, 2 parse/parameter error, 3 violated invariant or
// precondition, 4 truncated lattice (without --allow-truncated), 5 failed
// theorem clause.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sll/errors.hpp"
#include "sll/generator.hpp"
#include "sll/instance.hpp"
#include "sll/lattice.hpp"
#include "sll/suite.hpp"

namespace {

using namespace sll;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTruncated = 4;
constexpr int kExitClauseFailure = 5;

std::size_t default_lattice_cap() {
    if (const char* env = std::getenv("SLL_MAX_ELEMENTS")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && value > 0) return value;
        std::cerr << "warning: ignoring invalid SLL_MAX_ELEMENTS='" << env << "'\n";
    }
    return kDefaultLatticeCap;
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
    std::cout << text;
    if (out_path) write_file_atomic(*out_path, text);
}

int cmd_decompose(const std::string& path, const std::optional<std::string>& out_path) {
    auto start = std::chrono::steady_clock::now();
    InstanceFile file = InstanceFile::parse_text(read_file(path));
    DecomposeOutcome outcome = run_decompose(file);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    emit(decompose_json(file, outcome, ms), out_path);
    return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& suite,
               const std::optional<std::string>& out_path) {
    InstanceFile file = InstanceFile::parse_text(read_file(path));
    SuiteSelection selection = SuiteSelection::from_name(suite);
    ReportDocument doc = run_verify(file, selection);
    emit(report_document_json(doc), out_path);
    if (doc.any_failure()) {
        std::cerr << "verification failed:\n";
        for (const auto& rep : doc.reports) {
            if (!rep.all_passed()) std::cerr << "  " << rep.summary() << "\n";
        }
        return kExitClauseFailure;
    }
    if (!doc.any_applicable_clause()) {
        std::cerr << "notice: no applicable clauses for suite '" << suite
                  << "' on this instance\n";
    }
    return kExitOk;
}

int cmd_lattice(const std::string& path, std::size_t max_elements, bool allow_truncated,
                const std::optional<std::string>& dot_path, const std::string& labels,
                const std::optional<std::string>& out_path) {
    auto start = std::chrono::steady_clock::now();
    InstanceFile file = InstanceFile::parse_text(read_file(path));

    std::vector<Subspace> seeds;
    std::optional<CanonicalSplit> split;
    if (file.find_subspace("V1") != nullptr && file.find_subspace("V2") != nullptr) {
        ResolvedInstance inst = resolve_instance(file);
        seeds = {inst.dec.v1(), inst.dec.v2(), inst.dec.w1(), inst.dec.w2()};
        split = inst.dec.canonical_split();
        for (const auto& [name, rows] : file.subspaces) {
            if (name != "V1" && name != "V2" && name != "W1" && name != "W2") {
                seeds.push_back(Subspace::from_rows(rows));
            }
        }
    } else {
        for (const auto& [name, rows] : file.subspaces) {
            seeds.push_back(Subspace::from_rows(rows));
        }
        if (seeds.empty()) throw PreconditionError("instance declares no subspaces");
    }

    SubspaceLattice lat = closure(std::move(seeds), max_elements);

    std::optional<TheoremReport> homogeneity;
    if (!lat.truncated && split) {
        homogeneity = verify_lattice_homogeneity(lat, *split);
    }

    if (dot_path) {
        DotLabels l = labels == "bases" ? DotLabels::bases : DotLabels::dims;
        write_file_atomic(*dot_path, to_dot(lat, l));
        write_file_atomic(*dot_path + ".legend", dot_legend(lat));
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    emit(lattice_json(file, lat, homogeneity ? &*homogeneity : nullptr, ms), out_path);

    if (lat.truncated && !allow_truncated) {
        std::cerr << "lattice truncated at " << max_elements
                  << " elements (use --allow-truncated to accept)\n";
        return kExitTruncated;
    }
    if (homogeneity && !homogeneity->all_passed()) return kExitClauseFailure;
    return kExitOk;
}

int cmd_random(const std::string& field_token, std::size_t dim, std::uint64_t seed,
               const std::string& kind, std::size_t tensors,
               const std::optional<std::string>& out_path) {
    FieldSpec field;
    try {
        field = FieldSpec::parse(field_token);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(e.what());  // parameter problem: exit 2
    }
    if (dim == 0) throw CLI::ValidationError("--dim must be positive");
    if (kind == "curvature" && dim < 2) {
        throw CLI::ValidationError("curvature instances need --dim >= 2");
    }
    if (kind == "reflexive" || kind == "curvature") {
        if (dim < 2) throw CLI::ValidationError("reflexive instances need --dim >= 2");
    }

    Rng rng(seed);
    InstanceFile file;
    if (kind == "twosum") {
        file = to_instance(random_two_sum(rng, field, dim));
    } else if (kind == "reflexive") {
        file = to_instance(random_reflexive(rng, field, dim));
    } else if (kind == "curvature") {
        file = to_instance(random_curvature(rng, field, dim, tensors));
    } else {
        throw CLI::ValidationError("unknown --kind '" + kind + "'");
    }

    std::string text = file.emit_text();
    if (out_path) {
        write_file_atomic(*out_path, text);
    } else {
        std::cout << text;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic laboratory for pairs of supplementary subspaces"};
    app.require_subcommand(1);

    std::string path, suite = "all", kind = "twosum", labels = "dims", field_token = "gf:3";
    std::optional<std::string> out_path, dot_path;
    std::size_t max_elements = default_lattice_cap();
    bool allow_truncated = false;
    std::size_t dim = 4, tensors = 2;
    std::uint64_t seed = 0;

    CLI::App* decompose = app.add_subcommand(
        "decompose", "canonical split, chains and commutator of an instance");
    decompose->add_option("path", path, "instance file")->required();
    decompose->add_option("--out", out_path, "also write the report to this file");

    CLI::App* lattice = app.add_subcommand(
        "lattice", "closure of the instance subspaces under sum and intersection");
    lattice->add_option("path", path, "instance file")->required();
    lattice->add_option("--max", max_elements, "element cap for the closure");
    lattice->add_flag("--allow-truncated", allow_truncated, "exit 0 even when capped");
    lattice->add_option("--dot", dot_path, "write the Hasse diagram here (plus .legend)");
    lattice->add_option("--labels", labels, "node labels: dims or bases")
        ->check(CLI::IsMember({"dims", "bases"}));
    lattice->add_option("--out", out_path, "also write the report to this file");

    CLI::App* verify = app.add_subcommand("verify", "run the theorem verifiers on an instance");
    verify->add_option("path", path, "instance file")->required();
    verify->add_option("--suite", suite, "section2 | reflexive | representation | curvature | all")
        ->check(CLI::IsMember({"section2", "reflexive", "representation", "curvature", "all"}));
    verify->add_option("--out", out_path, "also write the report to this file");

    CLI::App* random = app.add_subcommand("random", "generate a seeded random instance");
    random->add_option("--field", field_token, "q or gf:p (p an odd prime)")->required();
    random->add_option("--dim", dim, "ambient dimension")->required();
    random->add_option("--seed", seed, "generator seed")->required();
    random->add_option("--kind", kind, "twosum | reflexive | curvature")
        ->check(CLI::IsMember({"twosum", "reflexive", "curvature"}));
    random->add_option("--tensors", tensors, "tensor count for curvature instances");
    random->add_option("--out", out_path, "write the instance here (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(path, out_path);
        if (verify->parsed()) return cmd_verify(path, suite, out_path);
        if (lattice->parsed()) {
            return cmd_lattice(path, max_elements, allow_truncated, dot_path, labels, out_path);
        }
        if (random->parsed()) return cmd_random(field_token, dim, seed, kind, tensors, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const TruncatedLatticeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTruncated;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::runtime_error& e) {
        // Unreadable or unwritable paths.
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
