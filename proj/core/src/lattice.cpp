#include "sll/lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "sll/errors.hpp"

namespace sll {

bool SubspaceLattice::contains(const Subspace& s) const {
    return index_of(s) != elements.size();
}

std::size_t SubspaceLattice::index_of(const Subspace& s) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == s) return i;
    }
    return elements.size();
}

namespace {

class ElementSet {
public:
    /// Returns the index, inserting when new.
    std::pair<std::size_t, bool> insert(const Subspace& s) {
        auto& bucket = buckets_[s.hash()];
        for (std::size_t idx : bucket) {
            if (elements_[idx] == s) return {idx, false};
        }
        elements_.push_back(s);
        bucket.push_back(elements_.size() - 1);
        return {elements_.size() - 1, true};
    }

    const std::vector<Subspace>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

private:
    std::vector<Subspace> elements_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
};

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const std::vector<Subspace>& elems) {
    // Elements are sorted by dimension; x is covered by the minimal strict
    // supersets.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        std::vector<std::size_t> covers;
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (elems[j].dim() <= elems[i].dim()) continue;
            if (!elems[j].contains(elems[i])) continue;
            bool minimal = true;
            for (std::size_t c : covers) {
                if (elems[j].contains(elems[c])) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) covers.push_back(j);
        }
        for (std::size_t c : covers) edges.emplace_back(i, c);
    }
    return edges;
}

}  // namespace

SubspaceLattice closure(std::vector<Subspace> seeds, std::size_t max_elements) {
    if (seeds.empty()) throw std::invalid_argument("closure needs at least one seed");
    const FieldSpec field = seeds.front().field();
    const std::size_t ambient = seeds.front().ambient_dim();
    for (const Subspace& s : seeds) {
        if (s.field() != field) throw FieldMismatchError("closure seeds");
        if (s.ambient_dim() != ambient) throw DimensionMismatchError("closure seeds");
    }
    if (max_elements < seeds.size()) {
        throw std::invalid_argument("max_elements is smaller than the seed list");
    }

    ElementSet set;
    std::deque<std::pair<std::size_t, std::size_t>> pending;
    std::vector<std::size_t> seed_indices;
    auto add = [&](const Subspace& s) -> bool {  // false when the cap bites
        auto [idx, added] = set.insert(s);
        if (!added) return true;
        if (set.size() > max_elements) return false;
        for (std::size_t other = 0; other + 1 < set.size(); ++other) {
            pending.emplace_back(other, idx);
        }
        return true;
    };

    bool truncated = false;
    for (const Subspace& s : seeds) {
        auto [idx, added] = set.insert(s);
        if (added) {
            for (std::size_t other = 0; other + 1 < set.size(); ++other) {
                pending.emplace_back(other, idx);
            }
        }
        seed_indices.push_back(idx);
    }

    while (!pending.empty() && !truncated) {
        auto [i, j] = pending.front();
        pending.pop_front();
        // Copies: ElementSet may reallocate while we insert.
        Subspace a = set.elements()[i];
        Subspace b = set.elements()[j];
        if (!add(sum(a, b)) || !add(intersect(a, b))) truncated = true;
    }

    SubspaceLattice lat;
    lat.truncated = truncated;
    lat.elements = set.elements();
    if (truncated && lat.elements.size() > max_elements) lat.elements.pop_back();

    // Canonical order, then remap the generator indices.
    std::vector<std::size_t> order(lat.elements.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare(lat.elements[a], lat.elements[b]) < 0;
    });
    std::vector<Subspace> sorted;
    sorted.reserve(lat.elements.size());
    std::vector<std::size_t> position(lat.elements.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.push_back(lat.elements[order[i]]);
        position[order[i]] = i;
    }
    lat.elements = std::move(sorted);
    for (std::size_t idx : seed_indices) {
        std::size_t pos = position[idx];
        if (std::find(lat.generators.begin(), lat.generators.end(), pos) == lat.generators.end()) {
            lat.generators.push_back(pos);
        }
    }
    std::sort(lat.generators.begin(), lat.generators.end());

    // The covering relation costs a quadratic number of containment tests;
    // skip it for lattices too large to draw.
    if (lat.elements.size() <= 4096) {
        lat.cover_edges = hasse_edges(lat.elements);
    }
    return lat;
}

TheoremReport verify_lattice_homogeneity(const SubspaceLattice& lat, const CanonicalSplit& split) {
    if (lat.truncated) {
        throw TruncatedLatticeError("homogeneity check needs a complete lattice");
    }
    TheoremReport rep("lattice_homogeneity");
    bool ok = true;
    std::string detail;
    for (const Subspace& v : lat.elements) {
        Subspace a = intersect(v, split.f_e);
        Subspace b = intersect(v, split.f_tau);
        Subspace c = intersect(v, split.ftilde);
        bool here = is_independent(std::vector<Subspace>{a, b, c}) && sum(sum(a, b), c) == v;
        if (!here && ok) {
            ok = false;
            detail = "element " + v.str() + " does not split";
        }
    }
    rep.check("every_element_splits_along_canonical_parts", ok, detail);
    return rep;
}

namespace {

void require_four_sums(const TwoSumDecomposition& dec) {
    auto pair_ok = [&](const Subspace& a, const Subspace& b) {
        return a.dim() + b.dim() == dec.ambient_dim() && sum(a, b).is_full();
    };
    if (!pair_ok(dec.v1(), dec.w2())) throw FourSumViolatedError("V1+W2");
    if (!pair_ok(dec.w1(), dec.v2())) throw FourSumViolatedError("W1+V2");
}

}  // namespace

FiveSumInvariant five_sum_invariant(const TwoSumDecomposition& dec) {
    require_four_sums(dec);
    const FieldSpec field = dec.field();

    Subspace top = sum(dec.v1(), dec.w1());
    Subspace bottom = intersect(dec.v1(), dec.w1());
    Subspace t1 = sum(bottom, intersect(dec.v2(), top));
    Subspace u1 = sum(bottom, intersect(dec.w2(), top));

    QuotientCoords qc = quotient_coords(top, bottom);
    auto to_quotient = [&](const Subspace& s) { return apply(qc.project, s); };
    Subspace vq = to_quotient(dec.v1());
    Subspace wq = to_quotient(dec.w1());
    Subspace tq = to_quotient(t1);
    Subspace uq = to_quotient(u1);

    const std::size_t q = top.dim() - bottom.dim();
    auto complement_in_quotient = [&](const Subspace& a, const Subspace& b) {
        return a.dim() + b.dim() == q && sum(a, b).dim() == q;
    };
    if (!complement_in_quotient(vq, wq) || !complement_in_quotient(vq, tq) ||
        !complement_in_quotient(wq, tq) || !complement_in_quotient(vq, uq) ||
        !complement_in_quotient(wq, uq)) {
        throw std::logic_error("quotient interval complements failed");
    }

    // Graph maps: i(v) is the part of v in W'1 along T'1, likewise j along U'1.
    auto graph_map = [&](const Subspace& along) {
        Matrix proj = projector_onto(wq, along);
        Matrix map(field, wq.dim(), vq.dim());
        for (std::size_t c = 0; c < vq.dim(); ++c) {
            Matrix v(field, 1, q);
            for (std::size_t col = 0; col < q; ++col) v.set(0, col, vq.basis().at(c, col));
            Matrix image = (proj * v.transpose()).transpose();
            Matrix coords = wq.coordinates_of(image);
            for (std::size_t r = 0; r < wq.dim(); ++r) map.set(r, c, coords.at(0, r));
        }
        return map;
    };
    Matrix i_map = graph_map(tq);
    Matrix j_map = graph_map(uq);
    auto j_inv = j_map.inverse();
    if (!i_map.inverse().has_value() || !j_inv.has_value()) {
        throw std::logic_error("graph maps of the quotient interval are singular");
    }
    Matrix composite = *j_inv * i_map;

    return FiveSumInvariant{std::move(t1),
                            std::move(u1),
                            std::move(i_map),
                            std::move(j_map),
                            invariant_factors(composite),
                            intersect(tq, uq)};
}

TheoremReport verify_theta2_lattice(const TwoSumDecomposition& dec, std::size_t max_elements) {
    require_four_sums(dec);
    Matrix theta2 = dec.theta() * dec.theta();
    if (!theta2.is_zero()) {
        throw PreconditionError("commutator square is nonzero");
    }

    const FieldSpec field = dec.field();
    const std::size_t n = dec.ambient_dim();
    TheoremReport rep("theta_square_zero_lattice");

    const Subspace& v1 = dec.v1();
    const Subspace& v2 = dec.v2();
    const Subspace& w1 = dec.w1();
    const Subspace& w2 = dec.w2();

    // Exchange lemma.
    {
        Subspace lhs = intersect(sum(v1, w1), v2);
        Subspace rhs = intersect(sum(v1, w1), w2);
        rep.check("exchange_lemma_right",
                  lhs == rhs && intersect(v2, w2).contains(lhs),
                  "(" + lhs.str() + " vs " + rhs.str() + ")");
        Subspace lhs2 = intersect(sum(v2, w2), v1);
        Subspace rhs2 = intersect(sum(v2, w2), w1);
        rep.check("exchange_lemma_left",
                  lhs2 == rhs2 && intersect(v1, w1).contains(lhs2),
                  "(" + lhs2.str() + " vs " + rhs2.str() + ")");
    }

    std::vector<Subspace> x{Subspace::zero(field, n), intersect(sum(v2, w2), v1),
                            intersect(v1, w1), v1};
    std::vector<Subspace> y{Subspace::zero(field, n), intersect(sum(v1, w1), v2),
                            intersect(v2, w2), v2};

    {
        bool chain_ok = true;
        for (std::size_t i = 0; i + 1 < 4; ++i) {
            chain_ok = chain_ok && x[i + 1].contains(x[i]) && y[i + 1].contains(y[i]);
        }
        rep.check("ladders_are_chains", chain_ok);
    }

    // Catalog and its product form.
    std::vector<Subspace> catalog;
    bool product_ok = true;
    bool direct_ok = true;
    for (const Subspace& xi : x) {
        for (const Subspace& yj : y) {
            Subspace box = sum(xi, yj);
            direct_ok = direct_ok && box.dim() == xi.dim() + yj.dim();
            product_ok = product_ok && box == intersect(sum(xi, v2), sum(v1, yj));
            catalog.push_back(std::move(box));
        }
    }
    catalog.push_back(w1);
    catalog.push_back(w2);
    rep.check("box_sums_are_direct", direct_ok);
    rep.check("box_product_form", product_ok);

    SubspaceLattice lat = closure({v1, v2, w1, w2}, max_elements);
    if (lat.truncated) {
        rep.check("closure_completes", false, "closure truncated at the element cap");
        return rep;
    }
    rep.check("closure_completes", true);
    rep.check("closure_has_at_most_18_elements", lat.size() <= 18,
              "closure has " + std::to_string(lat.size()) + " elements");

    bool within = true;
    std::string witness;
    for (const Subspace& e : lat.elements) {
        if (std::find(catalog.begin(), catalog.end(), e) == catalog.end()) {
            within = false;
            witness = e.str();
            break;
        }
    }
    rep.check("closure_within_catalog", within, "escaping element " + witness);

    bool covers = true;
    for (const Subspace& c : catalog) {
        if (!lat.contains(c)) {
            covers = false;
            witness = c.str();
            break;
        }
    }
    rep.check("catalog_within_closure", covers, "catalog element outside closure " + witness);
    return rep;
}

std::string to_dot(const SubspaceLattice& lat, DotLabels labels) {
    std::ostringstream os;
    os << "digraph lattice {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < lat.elements.size(); ++i) {
        const Subspace& s = lat.elements[i];
        os << "  n" << i << " [label=\"";
        if (labels == DotLabels::dims) {
            os << "n" << i << ": dim " << s.dim();
        } else {
            if (s.is_zero()) {
                os << "0";
            } else {
                for (std::size_t r = 0; r < s.dim(); ++r) {
                    os << "[";
                    for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
                        if (c > 0) os << " ";
                        os << s.basis().at(r, c).str();
                    }
                    os << "]\\l";
                }
            }
        }
        os << "\"";
        if (std::find(lat.generators.begin(), lat.generators.end(), i) != lat.generators.end()) {
            os << ", style=bold, color=blue";
        }
        os << "];\n";
    }
    for (const auto& [lo, hi] : lat.cover_edges) {
        os << "  n" << lo << " -> n" << hi << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string dot_legend(const SubspaceLattice& lat) {
    std::ostringstream os;
    for (std::size_t i = 0; i < lat.elements.size(); ++i) {
        os << "n" << i << " (dim " << lat.elements[i].dim() << "): " << lat.elements[i].str()
           << "\n";
    }
    return os.str();
}

}  // namespace sll
