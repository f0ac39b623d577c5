#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sll/bilinear_form.hpp"
#include "sll/field.hpp"
#include "sll/matrix.hpp"

namespace sll {

/// On-disk instance: a single JSON document with exact string scalars
/// ("a" or "a/b", never floats). "q" means rationals, "gf:p" the prime field.
/// Parsing validates structure and dimensions; mathematical preconditions
/// (complementarity, nondegeneracy) are checked where the data is used.
struct InstanceFile {
    struct FormData {
        BilinearForm::Kind kind;
        Matrix gram;
    };

    FieldSpec field;
    std::size_t dim = 0;
    /// Named basis-row lists, kept in the order used by canonical emission
    /// (sorted by name).
    std::vector<std::pair<std::string, Matrix>> subspaces;
    std::optional<FormData> form;
    std::vector<Matrix> algebra;
    /// Rank-4 coefficient arrays, flattened row-major c[i][j][k][l].
    std::vector<std::vector<Scalar>> curvature;

    const Matrix* find_subspace(const std::string& name) const;

    /// Throws ParseError with 1-based line/column on any structural problem.
    static InstanceFile parse_text(const std::string& text);
    /// Canonical emission: sorted keys, two-space indent, string scalars.
    /// parse_text(emit_text()) reproduces the instance byte-exactly.
    std::string emit_text() const;
};

/// Atomic file write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace sll
