#include <doctest.h>

#include "sll/errors.hpp"
#include "sll/generator.hpp"
#include "sll/instance.hpp"
#include "sll/suite.hpp"

using namespace sll;

namespace {
const FieldSpec F3 = FieldSpec::prime(3);

const char* kCrossedInstance = R"({
  "field": "q",
  "dim": 2,
  "subspaces": {
    "V1": [["1", "0"]],
    "V2": [["0", "1"]],
    "W1": [["1", "1"]],
    "W2": [["1", "-1"]]
  }
})";
}  // namespace

TEST_CASE("parse a hand-written instance") {
    InstanceFile file = InstanceFile::parse_text(kCrossedInstance);
    CHECK(file.field == FieldSpec::rationals());
    CHECK(file.dim == 2);
    CHECK(file.subspaces.size() == 4);
    REQUIRE(file.find_subspace("W2") != nullptr);
    CHECK(file.find_subspace("W2")->at(0, 1) == Scalar(FieldSpec::rationals(), -1));
    CHECK(file.find_subspace("X") == nullptr);

    ResolvedInstance inst = resolve_instance(file);
    CHECK(inst.dec.theta() == Matrix::from_strings(FieldSpec::rationals(),
                                                   {{"0", "-1/2"}, {"1/2", "0"}}));
}

TEST_CASE("integer and fraction entries parse losslessly") {
    InstanceFile file = InstanceFile::parse_text(R"({
      "field": "q", "dim": 1,
      "subspaces": {"V1": [[3]], "V2": [], "W1": [["-5/10"]], "W2": []}
    })");
    CHECK(file.find_subspace("V1")->at(0, 0).str() == "3");
    CHECK(file.find_subspace("W1")->at(0, 0).str() == "-1/2");
    CHECK(file.find_subspace("V2")->rows() == 0);
}

TEST_CASE("parse errors carry line and column") {
    try {
        InstanceFile::parse_text("{\n  \"field\": \"q\",\n  oops\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() >= 1);
    }
    CHECK_THROWS_AS(InstanceFile::parse_text("[]"), ParseError);
    CHECK_THROWS_AS(InstanceFile::parse_text("{\"field\": \"q\"}"), ParseError);
    CHECK_THROWS_AS(InstanceFile::parse_text(R"({"field": "gf:2", "dim": 1, "subspaces": {}})"),
                    ParseError);
    CHECK_THROWS_AS(InstanceFile::parse_text(
                        R"({"field": "q", "dim": 2, "subspaces": {"V1": [["1"]]}})"),
                    ParseError);
    // Floats are rejected: exact strings only.
    CHECK_THROWS_AS(InstanceFile::parse_text(
                        R"({"field": "q", "dim": 1, "subspaces": {"V1": [[1.5]]}})"),
                    ParseError);
}

TEST_CASE("emission is canonical and round-trips byte-exactly") {
    Rng rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        InstanceFile file = to_instance(random_two_sum(rng, F3, 3 + rng.below(3)));
        std::string text = file.emit_text();
        InstanceFile reparsed = InstanceFile::parse_text(text);
        CHECK(reparsed.emit_text() == text);
    }
    // Reflexive and curvature kinds too.
    InstanceFile refl = to_instance(random_reflexive(rng, F3, 4));
    CHECK(InstanceFile::parse_text(refl.emit_text()).emit_text() == refl.emit_text());
    InstanceFile curv = to_instance(random_curvature(rng, F3, 4, 2));
    CHECK(InstanceFile::parse_text(curv.emit_text()).emit_text() == curv.emit_text());
}

TEST_CASE("resolution failures are preconditions, not parse errors") {
    // Missing the V pair entirely.
    InstanceFile file = InstanceFile::parse_text(
        R"({"field": "q", "dim": 2, "subspaces": {"A": [["1", "0"]]}})");
    CHECK_THROWS_AS(resolve_instance(file), PreconditionError);

    // Overlapping V1, V2.
    InstanceFile overlap = InstanceFile::parse_text(
        R"({"field": "q", "dim": 2,
            "subspaces": {"V1": [["1", "0"]], "V2": [["1", "0"]],
                          "W1": [["1", "0"]], "W2": [["0", "1"]]}})");
    CHECK_THROWS_AS(resolve_instance(overlap), NotComplementaryError);

    // Degenerate Gram matrix.
    InstanceFile bad_form = InstanceFile::parse_text(
        R"({"field": "q", "dim": 2,
            "subspaces": {"V1": [["1", "0"]], "V2": [["0", "1"]]},
            "form": {"kind": "symmetric", "gram": [["1", "1"], ["1", "1"]]}})");
    CHECK_THROWS_AS(resolve_instance(bad_form), std::invalid_argument);
}

TEST_CASE("form-only instances derive the W pair") {
    InstanceFile file = InstanceFile::parse_text(
        R"({"field": "q", "dim": 2,
            "subspaces": {"V1": [["1", "0"]], "V2": [["0", "1"]]},
            "form": {"kind": "symmetric", "gram": [["0", "1"], ["1", "0"]]}})");
    ResolvedInstance inst = resolve_instance(file);
    CHECK(inst.reflexive_pairing);
    CHECK(inst.dec.w1() == inst.dec.v1());  // e1 is isotropic for the hyperbolic plane
}

TEST_CASE("verify driver on generated instances of all kinds") {
    Rng rng(11);
    SuiteSelection all = SuiteSelection::all();
    {
        ReportDocument doc = run_verify(to_instance(random_two_sum(rng, F3, 4)), all);
        CHECK_FALSE(doc.any_failure());
        CHECK(doc.any_applicable_clause());
    }
    {
        ReportDocument doc = run_verify(to_instance(random_reflexive(rng, F3, 4)), all);
        CHECK_FALSE(doc.any_failure());
    }
    {
        ReportDocument doc = run_verify(to_instance(random_curvature(rng, F3, 4, 2)), all);
        CHECK_FALSE(doc.any_failure());
    }
}

TEST_CASE("report documents surface failures") {
    ReportDocument doc;
    TheoremReport good("good");
    good.check("fine", true);
    doc.reports.push_back(good);
    CHECK_FALSE(doc.any_failure());
    CHECK(doc.any_applicable_clause());

    TheoremReport bad("bad");
    bad.check("broken", false, "witness");
    doc.reports.push_back(bad);
    CHECK(doc.any_failure());

    std::string json = report_document_json(doc);
    CHECK(json.find("\"fail\": 1") != std::string::npos);
    CHECK(json.find("witness") != std::string::npos);
}

TEST_CASE("suite selection names") {
    CHECK(SuiteSelection::from_name("all").curvature);
    CHECK(SuiteSelection::from_name("section2").section2);
    CHECK_FALSE(SuiteSelection::from_name("section2").reflexive);
    CHECK_THROWS_AS(SuiteSelection::from_name("nope"), std::invalid_argument);
}

TEST_CASE("decompose driver reports the nilpotency index") {
    InstanceFile file = InstanceFile::parse_text(kCrossedInstance);
    DecomposeOutcome outcome = run_decompose(file);
    CHECK(outcome.split.ftilde.is_full());
    CHECK(outcome.nilpotency_index == 0);  // invertible commutator: kernel chain stays at zero
}
