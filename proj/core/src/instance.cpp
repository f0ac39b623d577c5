#include "sll/instance.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sll/errors.hpp"

namespace sll {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_col_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail(const std::string& message) {
    throw ParseError(1, 1, message);
}

Scalar parse_entry(const FieldSpec& field, const ordered_json& j, const std::string& where) {
    try {
        if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
        if (j.is_number_integer()) return Scalar(field, j.get<long long>());
    } catch (const std::exception& e) {
        fail(where + ": " + e.what());
    }
    fail(where + ": entries must be integers or \"a/b\" strings");
}

Matrix parse_matrix(const FieldSpec& field, const ordered_json& j, std::size_t expect_cols,
                    const std::string& where) {
    if (!j.is_array()) fail(where + ": expected an array of rows");
    std::size_t rows = j.size();
    Matrix m(field, rows, expect_cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const ordered_json& row = j[r];
        if (!row.is_array() || row.size() != expect_cols) {
            fail(where + ": row " + std::to_string(r) + " must have " +
                 std::to_string(expect_cols) + " entries");
        }
        for (std::size_t c = 0; c < expect_cols; ++c) {
            m.set(r, c, parse_entry(field, row[c], where));
        }
    }
    return m;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

const Matrix* InstanceFile::find_subspace(const std::string& name) const {
    for (const auto& [n, m] : subspaces) {
        if (n == name) return &m;
    }
    return nullptr;
}

InstanceFile InstanceFile::parse_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, col, e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");

    InstanceFile out;
    if (!doc.contains("field") || !doc["field"].is_string()) fail("missing string key \"field\"");
    try {
        out.field = FieldSpec::parse(doc["field"].get<std::string>());
    } catch (const std::exception& e) {
        fail(std::string("field: ") + e.what());
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
        fail("missing non-negative integer key \"dim\"");
    }
    out.dim = doc["dim"].get<std::size_t>();

    if (!doc.contains("subspaces") || !doc["subspaces"].is_object()) {
        fail("missing object key \"subspaces\"");
    }
    for (const auto& [name, value] : doc["subspaces"].items()) {
        Matrix m = parse_matrix(out.field, value, out.dim, "subspaces." + name);
        out.subspaces.emplace_back(name, std::move(m));
    }
    std::sort(out.subspaces.begin(), out.subspaces.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    if (doc.contains("form")) {
        const ordered_json& f = doc["form"];
        if (!f.is_object() || !f.contains("kind") || !f.contains("gram")) {
            fail("form must be an object with \"kind\" and \"gram\"");
        }
        std::string kind = f["kind"].get<std::string>();
        BilinearForm::Kind k;
        if (kind == "symmetric") {
            k = BilinearForm::Kind::symmetric;
        } else if (kind == "antisymmetric") {
            k = BilinearForm::Kind::antisymmetric;
        } else {
            fail("form.kind must be \"symmetric\" or \"antisymmetric\"");
        }
        Matrix gram = parse_matrix(out.field, f["gram"], out.dim, "form.gram");
        if (gram.rows() != out.dim) fail("form.gram must be dim x dim");
        out.form = FormData{k, std::move(gram)};
    }

    if (doc.contains("algebra")) {
        if (!doc["algebra"].is_array()) fail("algebra must be an array of matrices");
        std::size_t i = 0;
        for (const auto& gen : doc["algebra"]) {
            Matrix m = parse_matrix(out.field, gen, out.dim, "algebra[" + std::to_string(i) + "]");
            if (m.rows() != out.dim) fail("algebra generators must be dim x dim");
            out.algebra.push_back(std::move(m));
            ++i;
        }
    }

    if (doc.contains("curvature")) {
        if (!doc["curvature"].is_array()) fail("curvature must be an array of tensors");
        std::size_t t = 0;
        for (const auto& tensor : doc["curvature"]) {
            const std::string where = "curvature[" + std::to_string(t) + "]";
            if (!tensor.is_array() || tensor.size() != out.dim) {
                fail(where + ": expected dim nested arrays");
            }
            std::vector<Scalar> coeffs;
            coeffs.reserve(out.dim * out.dim * out.dim * out.dim);
            for (std::size_t i = 0; i < out.dim; ++i) {
                const auto& level1 = tensor[i];
                if (!level1.is_array() || level1.size() != out.dim) fail(where + ": ragged tensor");
                for (std::size_t j = 0; j < out.dim; ++j) {
                    const auto& level2 = level1[j];
                    if (!level2.is_array() || level2.size() != out.dim) {
                        fail(where + ": ragged tensor");
                    }
                    for (std::size_t k = 0; k < out.dim; ++k) {
                        const auto& level3 = level2[k];
                        if (!level3.is_array() || level3.size() != out.dim) {
                            fail(where + ": ragged tensor");
                        }
                        for (std::size_t l = 0; l < out.dim; ++l) {
                            coeffs.push_back(parse_entry(out.field, level3[l], where));
                        }
                    }
                }
            }
            out.curvature.push_back(std::move(coeffs));
            ++t;
        }
    }
    return out;
}

std::string InstanceFile::emit_text() const {
    ordered_json doc;
    doc["field"] = field.name();
    doc["dim"] = dim;
    ordered_json subs = ordered_json::object();
    std::vector<std::pair<std::string, const Matrix*>> sorted;
    for (const auto& [name, m] : subspaces) sorted.emplace_back(name, &m);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [name, m] : sorted) subs[name] = matrix_json(*m);
    doc["subspaces"] = std::move(subs);
    if (form) {
        ordered_json f;
        f["kind"] = to_string(form->kind);
        f["gram"] = matrix_json(form->gram);
        doc["form"] = std::move(f);
    }
    if (!algebra.empty()) {
        ordered_json gens = ordered_json::array();
        for (const Matrix& m : algebra) gens.push_back(matrix_json(m));
        doc["algebra"] = std::move(gens);
    }
    if (!curvature.empty()) {
        ordered_json tensors = ordered_json::array();
        for (const auto& coeffs : curvature) {
            ordered_json ti = ordered_json::array();
            for (std::size_t i = 0; i < dim; ++i) {
                ordered_json tj = ordered_json::array();
                for (std::size_t j = 0; j < dim; ++j) {
                    ordered_json tk = ordered_json::array();
                    for (std::size_t k = 0; k < dim; ++k) {
                        ordered_json tl = ordered_json::array();
                        for (std::size_t l = 0; l < dim; ++l) {
                            tl.push_back(coeffs[((i * dim + j) * dim + k) * dim + l].str());
                        }
                        tk.push_back(std::move(tl));
                    }
                    tj.push_back(std::move(tk));
                }
                ti.push_back(std::move(tj));
            }
            tensors.push_back(std::move(ti));
        }
        doc["curvature"] = std::move(tensors);
    }
    return doc.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot move " + tmp + " into place");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace sll
