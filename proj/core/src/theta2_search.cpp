#include "sll/theta2_search.hpp"

#include <array>
#include <stdexcept>
#include <unordered_map>

#include "sll/subspace_enum.hpp"

namespace sll {

namespace {

// Vectors of GF(3)^4 are indexed 0..80 by their base-3 digits.
constexpr std::size_t kVectors = 81;
constexpr std::size_t kDim = 4;

using Mask = std::pair<std::uint64_t, std::uint64_t>;

struct MaskHash {
    std::size_t operator()(const Mask& m) const noexcept {
        return m.first * 0x9e3779b97f4a7c15ull ^ m.second;
    }
};

void mask_set(Mask& m, std::size_t v) {
    if (v < 64) {
        m.first |= 1ull << v;
    } else {
        m.second |= 1ull << (v - 64);
    }
}

Mask mask_and(const Mask& a, const Mask& b) {
    return {a.first & b.first, a.second & b.second};
}

using Vec = std::array<std::uint8_t, kDim>;
using Mat = std::array<std::uint8_t, kDim * kDim>;  // row-major mod-3 entries

std::size_t vec_id(const Vec& v) {
    return v[0] + 3 * (v[1] + 3 * (v[2] + 3 * static_cast<std::size_t>(v[3])));
}

Vec vec_of(std::size_t id) {
    Vec v;
    for (std::size_t i = 0; i < kDim; ++i) {
        v[i] = static_cast<std::uint8_t>(id % 3);
        id /= 3;
    }
    return v;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat out{};
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            unsigned acc = 0;
            for (std::size_t k = 0; k < kDim; ++k) acc += a[i * kDim + k] * b[k * kDim + j];
            out[i * kDim + j] = static_cast<std::uint8_t>(acc % 3);
        }
    }
    return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat out{};
    for (std::size_t i = 0; i < kDim * kDim; ++i) {
        out[i] = static_cast<std::uint8_t>((3 + a[i] - b[i]) % 3);
    }
    return out;
}

bool mat_is_zero(const Mat& a) {
    for (std::uint8_t e : a) {
        if (e != 0) return false;
    }
    return true;
}

/// Invert a 4x4 matrix mod 3 (columns are basis vectors); the input is
/// guaranteed invertible by construction.
Mat mat_inverse(const Mat& a) {
    std::array<std::uint8_t, kDim * 2 * kDim> aug{};
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) aug[r * 2 * kDim + c] = a[r * kDim + c];
        aug[r * 2 * kDim + kDim + r] = 1;
    }
    for (std::size_t col = 0; col < kDim; ++col) {
        std::size_t sel = col;
        while (sel < kDim && aug[sel * 2 * kDim + col] == 0) ++sel;
        if (sel == kDim) throw std::logic_error("singular matrix in search tables");
        if (sel != col) {
            for (std::size_t c = 0; c < 2 * kDim; ++c) {
                std::swap(aug[sel * 2 * kDim + c], aug[col * 2 * kDim + c]);
            }
        }
        std::uint8_t inv = aug[col * 2 * kDim + col] == 1 ? 1 : 2;  // inverses mod 3
        for (std::size_t c = 0; c < 2 * kDim; ++c) {
            aug[col * 2 * kDim + c] = static_cast<std::uint8_t>(aug[col * 2 * kDim + c] * inv % 3);
        }
        for (std::size_t r = 0; r < kDim; ++r) {
            if (r == col || aug[r * 2 * kDim + col] == 0) continue;
            std::uint8_t f = aug[r * 2 * kDim + col];
            for (std::size_t c = 0; c < 2 * kDim; ++c) {
                aug[r * 2 * kDim + c] = static_cast<std::uint8_t>(
                    (aug[r * 2 * kDim + c] + (3 - f) * aug[col * 2 * kDim + c]) % 3);
            }
        }
    }
    Mat out{};
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) out[r * kDim + c] = aug[r * 2 * kDim + kDim + c];
    }
    return out;
}

struct SearchTables {
    std::vector<Mask> masks;                     // per subspace index
    std::vector<std::uint8_t> dims;              // per subspace index
    std::vector<std::vector<std::size_t>> bases;  // basis vector ids per subspace
    std::vector<Subspace> subspaces;             // library objects, same order
    std::unordered_map<Mask, std::uint16_t, MaskHash> index_of;
    std::vector<std::uint16_t> sum_table;        // 212 x 212
    std::vector<std::uint16_t> meet_table;       // 212 x 212
    std::vector<std::uint64_t> complement_bits;  // 212 rows x 4 words
    std::size_t count = 0;
    std::uint16_t zero_index = 0;

    struct Pair {
        std::uint16_t a;
        std::uint16_t b;
        Mat projector;  // onto a along b
    };
    std::vector<Pair> pairs;

    std::uint16_t sum(std::uint16_t a, std::uint16_t b) const { return sum_table[a * count + b]; }
    std::uint16_t meet(std::uint16_t a, std::uint16_t b) const { return meet_table[a * count + b]; }
    bool complementary(std::uint16_t a, std::uint16_t b) const {
        return (complement_bits[a * 4 + b / 64] >> (b % 64)) & 1;
    }
    bool contains(std::uint16_t big, std::uint16_t small) const {
        return meet(big, small) == small;
    }
};

const SearchTables& tables() {
    static const SearchTables t = [] {
        SearchTables t;
        const FieldSpec f3 = FieldSpec::prime(3);

        // Vector addition table.
        std::array<std::array<std::uint8_t, kVectors>, kVectors> add{};
        for (std::size_t a = 0; a < kVectors; ++a) {
            for (std::size_t b = 0; b < kVectors; ++b) {
                Vec va = vec_of(a), vb = vec_of(b);
                Vec vc;
                for (std::size_t i = 0; i < kDim; ++i) {
                    vc[i] = static_cast<std::uint8_t>((va[i] + vb[i]) % 3);
                }
                add[a][b] = static_cast<std::uint8_t>(vec_id(vc));
            }
        }

        t.subspaces = all_subspaces(f3, kDim);
        t.count = t.subspaces.size();
        t.masks.resize(t.count);
        t.dims.resize(t.count);
        t.bases.resize(t.count);
        for (std::size_t i = 0; i < t.count; ++i) {
            const Subspace& s = t.subspaces[i];
            t.dims[i] = static_cast<std::uint8_t>(s.dim());
            std::vector<std::size_t> basis_ids;
            for (std::size_t r = 0; r < s.dim(); ++r) {
                Vec v{};
                for (std::size_t c = 0; c < kDim; ++c) {
                    v[c] = static_cast<std::uint8_t>(std::stoul(s.basis().at(r, c).str()));
                }
                basis_ids.push_back(vec_id(v));
            }
            t.bases[i] = basis_ids;
            // All 3^d combinations of the basis span the point set.
            Mask m{0, 0};
            std::vector<std::uint8_t> coeff(basis_ids.size(), 0);
            for (;;) {
                std::size_t point = 0;
                for (std::size_t r = 0; r < basis_ids.size(); ++r) {
                    for (std::uint8_t rep = 0; rep < coeff[r]; ++rep) {
                        point = add[point][basis_ids[r]];
                    }
                }
                mask_set(m, point);
                std::size_t k = 0;
                while (k < coeff.size() && ++coeff[k] == 3) coeff[k++] = 0;
                if (k == coeff.size()) break;
            }
            if (basis_ids.empty()) mask_set(m, 0);
            t.masks[i] = m;
            t.index_of.emplace(m, static_cast<std::uint16_t>(i));
            if (s.is_zero()) t.zero_index = static_cast<std::uint16_t>(i);
        }

        // Meet = mask intersection; sum = span of the union, found by
        // closing the union under vector addition once (unions of subspaces
        // close in a single pass because the result is again a subspace).
        t.sum_table.resize(t.count * t.count);
        t.meet_table.resize(t.count * t.count);
        t.complement_bits.assign(t.count * 4, 0);
        for (std::size_t a = 0; a < t.count; ++a) {
            for (std::size_t b = a; b < t.count; ++b) {
                Mask meet = mask_and(t.masks[a], t.masks[b]);
                std::uint16_t meet_idx = t.index_of.at(meet);
                t.meet_table[a * t.count + b] = meet_idx;
                t.meet_table[b * t.count + a] = meet_idx;

                // Span the two bases.
                std::vector<std::size_t> gens = t.bases[a];
                gens.insert(gens.end(), t.bases[b].begin(), t.bases[b].end());
                Mask span{0, 0};
                std::vector<std::size_t> points{0};
                mask_set(span, 0);
                for (std::size_t g : gens) {
                    std::size_t existing = points.size();
                    for (std::size_t rep = 1; rep <= 2; ++rep) {
                        std::size_t shift = 0;
                        for (std::size_t r = 0; r < rep; ++r) shift = add[shift][g];
                        for (std::size_t i = 0; i < existing; ++i) {
                            std::size_t p = add[points[i]][shift];
                            Mask probe = span;
                            mask_set(probe, p);
                            if (probe != span) {
                                span = probe;
                                points.push_back(p);
                            }
                        }
                    }
                }
                std::uint16_t sum_idx = t.index_of.at(span);
                t.sum_table[a * t.count + b] = sum_idx;
                t.sum_table[b * t.count + a] = sum_idx;
            }
        }
        for (std::size_t a = 0; a < t.count; ++a) {
            for (std::size_t b = 0; b < t.count; ++b) {
                bool comp = t.dims[a] + t.dims[b] == kDim &&
                            t.meet_table[a * t.count + b] == t.zero_index;
                if (comp) t.complement_bits[a * 4 + b / 64] |= 1ull << (b % 64);
            }
        }

        // Ordered complementary pairs with their projector matrices.
        for (std::size_t a = 0; a < t.count; ++a) {
            for (std::size_t b = 0; b < t.count; ++b) {
                if (!t.complementary(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b))) {
                    continue;
                }
                Mat basis{};  // columns: basis of a then basis of b
                std::size_t col = 0;
                for (std::size_t id : t.bases[a]) {
                    Vec v = vec_of(id);
                    for (std::size_t r = 0; r < kDim; ++r) basis[r * kDim + col] = v[r];
                    ++col;
                }
                for (std::size_t id : t.bases[b]) {
                    Vec v = vec_of(id);
                    for (std::size_t r = 0; r < kDim; ++r) basis[r * kDim + col] = v[r];
                    ++col;
                }
                Mat diag{};
                for (std::size_t i = 0; i < t.dims[a]; ++i) diag[i * kDim + i] = 1;
                Mat projector = mat_mul(basis, mat_mul(diag, mat_inverse(basis)));
                t.pairs.push_back(SearchTables::Pair{static_cast<std::uint16_t>(a),
                                                     static_cast<std::uint16_t>(b), projector});
            }
        }
        return t;
    }();
    return t;
}

/// Catalog check in table arithmetic; mirrors verify_theta2_lattice.
bool catalog_holds(const SearchTables& t, std::uint16_t v1, std::uint16_t v2, std::uint16_t w1,
                   std::uint16_t w2) {
    std::uint16_t vw1 = t.sum(v1, w1);
    std::uint16_t vw2 = t.sum(v2, w2);

    // Exchange lemma.
    std::uint16_t y1 = t.meet(vw1, v2);
    if (y1 != t.meet(vw1, w2)) return false;
    std::uint16_t y2 = t.meet(v2, w2);
    if (!t.contains(y2, y1)) return false;
    std::uint16_t x1 = t.meet(vw2, v1);
    if (x1 != t.meet(vw2, w1)) return false;
    std::uint16_t x2 = t.meet(v1, w1);
    if (!t.contains(x2, x1)) return false;

    std::array<std::uint16_t, 4> xs{t.zero_index, x1, x2, v1};
    std::array<std::uint16_t, 4> ys{t.zero_index, y1, y2, v2};
    for (std::size_t i = 0; i + 1 < 4; ++i) {
        if (!t.contains(xs[i + 1], xs[i]) || !t.contains(ys[i + 1], ys[i])) return false;
    }

    // Catalog set and product form.
    std::array<std::uint16_t, 18> catalog{};
    std::size_t cat_count = 0;
    for (std::uint16_t xi : xs) {
        for (std::uint16_t yj : ys) {
            std::uint16_t box = t.sum(xi, yj);
            if (t.dims[box] != t.dims[xi] + t.dims[yj]) return false;
            if (box != t.meet(t.sum(xi, v2), t.sum(v1, yj))) return false;
            catalog[cat_count++] = box;
        }
    }
    catalog[cat_count++] = w1;
    catalog[cat_count++] = w2;

    // Closure of the four generators under the tables.
    std::array<std::uint16_t, 40> closure{};
    std::size_t closure_count = 0;
    auto push = [&](std::uint16_t s) -> bool {
        for (std::size_t i = 0; i < closure_count; ++i) {
            if (closure[i] == s) return true;
        }
        if (closure_count >= closure.size()) return false;
        closure[closure_count++] = s;
        return true;
    };
    push(v1);
    push(v2);
    push(w1);
    push(w2);
    for (std::size_t i = 0; i < closure_count; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (!push(t.sum(closure[i], closure[j]))) return false;
            if (!push(t.meet(closure[i], closure[j]))) return false;
        }
    }
    if (closure_count > 18) return false;
    for (std::size_t i = 0; i < closure_count; ++i) {
        bool in_catalog = false;
        for (std::size_t c = 0; c < cat_count; ++c) {
            if (catalog[c] == closure[i]) {
                in_catalog = true;
                break;
            }
        }
        if (!in_catalog) return false;
    }
    // The catalog elements are themselves generated, so they must all appear.
    for (std::size_t c = 0; c < cat_count; ++c) {
        bool in_closure = false;
        for (std::size_t i = 0; i < closure_count; ++i) {
            if (closure[i] == catalog[c]) {
                in_closure = true;
                break;
            }
        }
        if (!in_closure) return false;
    }
    return true;
}

}  // namespace

Theta2SearchResult theta2_search_gf3_dim4(const Theta2SearchOptions& options) {
    const SearchTables& t = tables();
    Theta2SearchResult result;

    for (const auto& vp : t.pairs) {
        for (const auto& wp : t.pairs) {
            ++result.pairs_scanned;
            if (!t.complementary(vp.a, wp.b) || !t.complementary(wp.a, vp.b)) continue;
            ++result.four_sum_quadruples;

            Mat qp = mat_mul(wp.projector, vp.projector);
            Mat pq = mat_mul(vp.projector, wp.projector);
            Mat theta = mat_sub(qp, pq);
            if (mat_is_zero(theta)) continue;
            if (!mat_is_zero(mat_mul(theta, theta))) continue;

            ++result.found;
            if (options.check_catalog && !catalog_holds(t, vp.a, vp.b, wp.a, wp.b)) {
                ++result.catalog_failures;
            }
            if (result.samples.size() < options.sample_limit) {
                result.samples.push_back(Theta2Instance{t.subspaces[vp.a], t.subspaces[vp.b],
                                                        t.subspaces[wp.a], t.subspaces[wp.b]});
            }
            if (options.stop_after_found > 0 && result.found >= options.stop_after_found) {
                return result;
            }
        }
    }
    return result;
}

}  // namespace sll
