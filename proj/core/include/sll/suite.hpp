#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sll/curvature.hpp"
#include "sll/generator.hpp"
#include "sll/instance.hpp"
#include "sll/lattice.hpp"
#include "sll/report.hpp"
#include "sll/representation.hpp"
#include "sll/two_sum.hpp"

namespace sll {

/// Which verifier families to run.
struct SuiteSelection {
    bool section2 = false;
    bool reflexive = false;
    bool representation = false;
    bool curvature = false;

    static SuiteSelection all();
    /// Accepts section2 | reflexive | representation | curvature | all.
    static SuiteSelection from_name(const std::string& name);
};

/// In-memory resolution of an instance file: the decomposition (given
/// directly or through the form), plus optional form, algebra and tensors.
/// Mathematical preconditions are validated here, after parsing.
struct ResolvedInstance {
    TwoSumDecomposition dec;
    std::optional<BilinearForm> form;
    bool reflexive_pairing = false;  // W_i = perp(V_i)
    std::optional<MatrixLieAlgebra> algebra;
    std::vector<CurvatureTensor> tensors;
};
ResolvedInstance resolve_instance(const InstanceFile& file);

struct ReportDocument {
    /// Instance summary.
    std::string field;
    std::size_t dim = 0;
    std::vector<std::pair<std::string, std::size_t>> subspace_dims;
    bool has_form = false;
    std::size_t algebra_generators = 0;
    std::size_t tensor_count = 0;

    std::vector<TheoremReport> reports;
    std::int64_t timing_ms = 0;

    bool any_failure() const;
    bool any_applicable_clause() const;
};

/// Runs every verifier in the selection that the file's contents support;
/// suites whose data is absent contribute a single inapplicable notice.
ReportDocument run_verify(const InstanceFile& file, const SuiteSelection& selection);

/// The canonical-decomposition report behind the decompose command.
struct DecomposeOutcome {
    TwoSumDecomposition dec;
    ChainReport chains;
    CanonicalSplit split;
    std::size_t nilpotency_index = 0;
};
DecomposeOutcome run_decompose(const InstanceFile& file);

/// JSON renderings (canonical, human-diffable).
std::string report_document_json(const ReportDocument& doc);
std::string decompose_json(const InstanceFile& file, const DecomposeOutcome& outcome,
                           std::int64_t timing_ms);
std::string lattice_json(const InstanceFile& file, const SubspaceLattice& lat,
                         const TheoremReport* homogeneity, std::int64_t timing_ms);

/// Instance files for the generator output (canonical subspace names).
InstanceFile to_instance(const GeneratedTwoSum& gen);
InstanceFile to_instance(const GeneratedReflexive& gen);
InstanceFile to_instance(const GeneratedCurvature& gen);

}  // namespace sll
