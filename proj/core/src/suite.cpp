#include "sll/suite.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "sll/errors.hpp"

namespace sll {

namespace {
using ordered_json = nlohmann::ordered_json;
}

SuiteSelection SuiteSelection::all() {
    return SuiteSelection{true, true, true, true};
}

SuiteSelection SuiteSelection::from_name(const std::string& name) {
    if (name == "all") return all();
    SuiteSelection s;
    if (name == "section2") {
        s.section2 = true;
    } else if (name == "reflexive") {
        s.reflexive = true;
    } else if (name == "representation") {
        s.representation = true;
    } else if (name == "curvature") {
        s.curvature = true;
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return s;
}

ResolvedInstance resolve_instance(const InstanceFile& file) {
    std::optional<BilinearForm> form;
    if (file.form) {
        form = BilinearForm::make(file.form->kind, file.form->gram);
    }

    const Matrix* v1 = file.find_subspace("V1");
    const Matrix* v2 = file.find_subspace("V2");
    if (v1 == nullptr || v2 == nullptr) {
        throw PreconditionError("instance must declare subspaces V1 and V2");
    }
    Subspace sv1 = Subspace::from_rows(*v1);
    Subspace sv2 = Subspace::from_rows(*v2);

    const Matrix* w1 = file.find_subspace("W1");
    const Matrix* w2 = file.find_subspace("W2");
    Subspace sw1 = Subspace::zero(file.field, file.dim);
    Subspace sw2 = Subspace::zero(file.field, file.dim);
    if (w1 != nullptr && w2 != nullptr) {
        sw1 = Subspace::from_rows(*w1);
        sw2 = Subspace::from_rows(*w2);
    } else if (w1 == nullptr && w2 == nullptr) {
        if (!form) {
            throw PreconditionError("instance must declare W1 and W2, or a form to derive them");
        }
        sw1 = form->perp(sv1);
        sw2 = form->perp(sv2);
    } else {
        throw PreconditionError("instance declares only one of W1, W2");
    }

    ResolvedInstance out{TwoSumDecomposition::make(std::move(sv1), std::move(sv2), std::move(sw1),
                                                   std::move(sw2)),
                         std::move(form),
                         false,
                         std::nullopt,
                         {}};
    out.reflexive_pairing = out.form && is_reflexive_type(*out.form, out.dec);

    if (!file.algebra.empty()) {
        out.algebra = lie_closure(file.field, file.dim, file.algebra);
    }
    for (const auto& coeffs : file.curvature) {
        out.tensors.push_back(CurvatureTensor::from_coeffs(file.field, file.dim, coeffs));
    }
    return out;
}

bool ReportDocument::any_failure() const {
    for (const auto& rep : reports) {
        if (!rep.all_passed()) return true;
    }
    return false;
}

bool ReportDocument::any_applicable_clause() const {
    for (const auto& rep : reports) {
        for (const auto& clause : rep.clauses()) {
            if (clause.status != ClauseStatus::inapplicable) return true;
        }
    }
    return false;
}

namespace {

TheoremReport notice(const std::string& name, const std::string& why) {
    TheoremReport rep(name);
    rep.mark_inapplicable("suite_applicable", why);
    return rep;
}

void fill_summary(ReportDocument& doc, const InstanceFile& file) {
    doc.field = file.field.name();
    doc.dim = file.dim;
    for (const auto& [name, rows] : file.subspaces) {
        doc.subspace_dims.emplace_back(name, Subspace::from_rows(rows).dim());
    }
    doc.has_form = file.form.has_value();
    doc.algebra_generators = file.algebra.size();
    doc.tensor_count = file.curvature.size();
}

}  // namespace

ReportDocument run_verify(const InstanceFile& file, const SuiteSelection& selection) {
    auto start = std::chrono::steady_clock::now();
    ReportDocument doc;
    fill_summary(doc, file);

    ResolvedInstance inst = resolve_instance(file);

    if (selection.section2) {
        doc.reports.push_back(inst.dec.verify_chain_identities());
    }

    if (selection.reflexive) {
        if (!inst.form) {
            doc.reports.push_back(notice("reflexive_orthogonal_split", "no form in the instance"));
        } else if (!inst.reflexive_pairing) {
            doc.reports.push_back(
                notice("reflexive_orthogonal_split", "W_i is not perp(V_i) for the given form"));
        } else {
            doc.reports.push_back(verify_orthogonal_split(*inst.form, inst.dec));
        }
    }

    if (selection.representation) {
        const BilinearForm* form_ptr =
            inst.form && inst.reflexive_pairing ? &*inst.form : nullptr;
        doc.reports.push_back(verify_eigenspace_split(inst.dec, form_ptr));

        if (form_ptr == nullptr) {
            doc.reports.push_back(
                notice("isotropic_split", "needs a form with the reflexive pairing"));
            doc.reports.push_back(
                notice("structure_theorem", "needs a form with the reflexive pairing"));
        } else {
            const MatrixLieAlgebra* alg_ptr = inst.algebra ? &*inst.algebra : nullptr;
            doc.reports.push_back(
                verify_isotropic_split(*inst.form, inst.dec.v1(), inst.dec.v2(), alg_ptr));
            MatrixLieAlgebra alg =
                inst.algebra ? *inst.algebra : MatrixLieAlgebra::zero(file.field, file.dim);
            if (leaves_invariant(alg, inst.dec.v1()) && leaves_invariant(alg, inst.dec.v2())) {
                doc.reports.push_back(verify_structure_theorem(*inst.form, inst.dec, alg));
            } else {
                doc.reports.push_back(
                    notice("structure_theorem", "algebra does not preserve V1 and V2"));
            }
        }
    }

    if (selection.curvature) {
        if (inst.tensors.empty()) {
            doc.reports.push_back(notice("curvature_suite", "no curvature tensors in the instance"));
        } else {
            MatrixLieAlgebra berger = berger_algebra(file.field, file.dim, inst.tensors);
            TheoremReport basics("curvature_basics");
            bool all_match = true;
            for (const auto& r : inst.tensors) all_match = all_match && matches(r, berger);
            basics.check("tensors_match_generated_algebra", all_match);

            CanonicalSplit split = inst.dec.canonical_split();
            std::vector<Subspace> fitting_parts;
            Subspace nilpotent = sum(split.f_e, split.f_tau);
            if (!nilpotent.is_zero()) fitting_parts.push_back(nilpotent);
            if (!split.ftilde.is_zero()) fitting_parts.push_back(split.ftilde);
            bool invariant = true;
            for (const Subspace& part : fitting_parts) {
                invariant = invariant && leaves_invariant(berger, part);
            }
            if (invariant) {
                basics.check("exterior_product_along_fitting_parts",
                             exterior_product_check(berger, fitting_parts));
            } else {
                basics.mark_inapplicable("exterior_product_along_fitting_parts",
                                         "algebra does not preserve the canonical parts");
            }
            doc.reports.push_back(std::move(basics));

            if (invariant && fitting_parts.size() >= 2) {
                for (const auto& r : inst.tensors) {
                    doc.reports.push_back(verify_block_vanishing(r, fitting_parts));
                }
            }

            if (inst.form && inst.form->kind() == BilinearForm::Kind::symmetric &&
                inst.reflexive_pairing) {
                TheoremReport pair("curvature_pair_symmetry");
                bool ok = true;
                for (const auto& r : inst.tensors) ok = ok && verify_pair_symmetry(*inst.form, r);
                pair.check("pair_symmetry_on_basis_quadruples", ok);
                doc.reports.push_back(std::move(pair));
                doc.reports.push_back(verify_metric_theorem(*inst.form, inst.dec, inst.tensors));
                doc.reports.push_back(verify_theta_square_zero(*inst.form, inst.dec, inst.tensors));
            } else {
                doc.reports.push_back(
                    notice("metric_curvature_theorem", "needs a symmetric reflexive form"));
            }
        }
    }

    doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return doc;
}

DecomposeOutcome run_decompose(const InstanceFile& file) {
    ResolvedInstance inst = resolve_instance(file);
    ChainReport chains = inst.dec.chains();
    CanonicalSplit split = inst.dec.canonical_split(chains);
    std::size_t nilpotency = ChainReport::stabilization_index(chains.f);
    return DecomposeOutcome{std::move(inst.dec), std::move(chains), std::move(split), nilpotency};
}

namespace {

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json subspace_json(const Subspace& s) {
    ordered_json j;
    j["dim"] = s.dim();
    j["basis"] = matrix_json(s.basis());
    return j;
}

ordered_json chain_json(const std::vector<Subspace>& chain) {
    ordered_json j = ordered_json::array();
    for (const Subspace& s : chain) j.push_back(subspace_json(s));
    return j;
}

ordered_json clauses_json(const TheoremReport& rep) {
    ordered_json j;
    j["name"] = rep.name();
    ordered_json clauses = ordered_json::array();
    for (const Clause& c : rep.clauses()) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["status"] = to_string(c.status);
        if (!c.detail.empty()) cj["detail"] = c.detail;
        clauses.push_back(std::move(cj));
    }
    j["clauses"] = std::move(clauses);
    return j;
}

ordered_json summary_json(const ReportDocument& doc) {
    ordered_json j;
    j["field"] = doc.field;
    j["dim"] = doc.dim;
    ordered_json subs = ordered_json::object();
    for (const auto& [name, d] : doc.subspace_dims) subs[name] = d;
    j["subspaces"] = std::move(subs);
    j["has_form"] = doc.has_form;
    j["algebra_generators"] = doc.algebra_generators;
    j["tensors"] = doc.tensor_count;
    return j;
}

}  // namespace

std::string report_document_json(const ReportDocument& doc) {
    ordered_json j;
    j["instance"] = summary_json(doc);
    ordered_json reports = ordered_json::array();
    std::size_t pass = 0, fail = 0, inapplicable = 0;
    for (const auto& rep : doc.reports) {
        reports.push_back(clauses_json(rep));
        for (const auto& c : rep.clauses()) {
            switch (c.status) {
                case ClauseStatus::pass: ++pass; break;
                case ClauseStatus::fail: ++fail; break;
                case ClauseStatus::inapplicable: ++inapplicable; break;
            }
        }
    }
    j["reports"] = std::move(reports);
    ordered_json totals;
    totals["pass"] = pass;
    totals["fail"] = fail;
    totals["inapplicable"] = inapplicable;
    j["totals"] = std::move(totals);
    j["timing_ms"] = doc.timing_ms;
    return j.dump(2) + "\n";
}

std::string decompose_json(const InstanceFile& file, const DecomposeOutcome& outcome,
                           std::int64_t timing_ms) {
    ReportDocument summary;
    fill_summary(summary, file);
    ordered_json j;
    j["instance"] = summary_json(summary);
    ordered_json split;
    split["f_e"] = subspace_json(outcome.split.f_e);
    split["f_tau"] = subspace_json(outcome.split.f_tau);
    split["ftilde"] = subspace_json(outcome.split.ftilde);
    j["canonical_split"] = std::move(split);
    j["theta"] = matrix_json(outcome.dec.theta());
    j["nilpotency_index"] = outcome.nilpotency_index;
    ordered_json chains;
    chains["f"] = chain_json(outcome.chains.f);
    chains["ftilde"] = chain_json(outcome.chains.ftilde);
    chains["f_e"] = chain_json(outcome.chains.f_e);
    chains["f_tau"] = chain_json(outcome.chains.f_tau);
    chains["ftilde_e"] = chain_json(outcome.chains.ftilde_e);
    chains["ftilde_tau"] = chain_json(outcome.chains.ftilde_tau);
    j["chains"] = std::move(chains);
    j["timing_ms"] = timing_ms;
    return j.dump(2) + "\n";
}

std::string lattice_json(const InstanceFile& file, const SubspaceLattice& lat,
                         const TheoremReport* homogeneity, std::int64_t timing_ms) {
    ReportDocument summary;
    fill_summary(summary, file);
    ordered_json j;
    j["instance"] = summary_json(summary);
    j["elements"] = lat.size();
    j["truncated"] = lat.truncated;
    j["cover_edges"] = lat.cover_edges.size();
    ordered_json dims = ordered_json::array();
    for (const Subspace& s : lat.elements) dims.push_back(s.dim());
    j["element_dims"] = std::move(dims);
    if (homogeneity != nullptr) j["homogeneity"] = clauses_json(*homogeneity);
    j["timing_ms"] = timing_ms;
    return j.dump(2) + "\n";
}

namespace {

InstanceFile base_instance(const FieldSpec& field, std::size_t dim) {
    InstanceFile file;
    file.field = field;
    file.dim = dim;
    return file;
}

}  // namespace

InstanceFile to_instance(const GeneratedTwoSum& gen) {
    InstanceFile file = base_instance(gen.dec.field(), gen.dec.ambient_dim());
    file.subspaces.emplace_back("V1", gen.dec.v1().basis());
    file.subspaces.emplace_back("V2", gen.dec.v2().basis());
    file.subspaces.emplace_back("W1", gen.dec.w1().basis());
    file.subspaces.emplace_back("W2", gen.dec.w2().basis());
    return file;
}

InstanceFile to_instance(const GeneratedReflexive& gen) {
    InstanceFile file = base_instance(gen.dec.field(), gen.dec.ambient_dim());
    file.subspaces.emplace_back("V1", gen.dec.v1().basis());
    file.subspaces.emplace_back("V2", gen.dec.v2().basis());
    file.form = InstanceFile::FormData{gen.form.kind(), gen.form.gram()};
    return file;
}

InstanceFile to_instance(const GeneratedCurvature& gen) {
    InstanceFile file = base_instance(gen.dec.field(), gen.dec.ambient_dim());
    file.subspaces.emplace_back("V1", gen.dec.v1().basis());
    file.subspaces.emplace_back("V2", gen.dec.v2().basis());
    file.form = InstanceFile::FormData{gen.form.kind(), gen.form.gram()};
    for (const CurvatureTensor& r : gen.tensors) file.curvature.push_back(r.coeffs());
    return file;
}

}  // namespace sll
