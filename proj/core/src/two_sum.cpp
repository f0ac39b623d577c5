#include "sll/two_sum.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "sll/errors.hpp"

namespace sll {

const char* to_string(Sigma s) {
    return s == Sigma::e ? "e" : "tau";
}

std::size_t ChainReport::stabilization_index(const std::vector<Subspace>& chain) {
    for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
        if (chain[n] == chain[n + 1]) return n;
    }
    throw std::logic_error("chain is not stabilized");
}

TwoSumDecomposition::TwoSumDecomposition(Subspace v1, Subspace v2, Subspace w1, Subspace w2,
                                         Matrix p1, Matrix p2, Matrix q1, Matrix q2, Matrix theta)
    : v1_(std::move(v1)),
      v2_(std::move(v2)),
      w1_(std::move(w1)),
      w2_(std::move(w2)),
      p1_(std::move(p1)),
      p2_(std::move(p2)),
      q1_(std::move(q1)),
      q2_(std::move(q2)),
      theta_(std::move(theta)) {}

TwoSumDecomposition TwoSumDecomposition::make(Subspace v1, Subspace v2, Subspace w1, Subspace w2) {
    const FieldSpec field = v1.field();
    const std::size_t n = v1.ambient_dim();
    for (const Subspace* s : {&v2, &w1, &w2}) {
        if (s->field() != field) throw FieldMismatchError("decomposition subspace fields differ");
        if (s->ambient_dim() != n) throw DimensionMismatchError("decomposition ambient dimensions differ");
    }
    if (v1.dim() + v2.dim() != n || !sum(v1, v2).is_full()) throw NotComplementaryError("V");
    if (w1.dim() + w2.dim() != n || !sum(w1, w2).is_full()) throw NotComplementaryError("W");

    Matrix p1 = projector_onto(v1, v2);
    Matrix q1 = projector_onto(w1, w2);
    Matrix id = Matrix::identity(field, n);
    Matrix p2 = id - p1;
    Matrix q2 = id - q1;
    Matrix theta = q1 * p1 - p1 * q1;
    return TwoSumDecomposition(std::move(v1), std::move(v2), std::move(w1), std::move(w2),
                               std::move(p1), std::move(p2), std::move(q1), std::move(q2),
                               std::move(theta));
}

const Matrix& TwoSumDecomposition::projector(Which which) const {
    switch (which) {
        case Which::p1: return p1_;
        case Which::p2: return p2_;
        case Which::q1: return q1_;
        case Which::q2: return q2_;
    }
    throw std::logic_error("unreachable");
}

TwoSumDecomposition TwoSumDecomposition::dual() const {
    return make(annihilator(w1_), annihilator(w2_), annihilator(v1_), annihilator(v2_));
}

TwoSumDecomposition TwoSumDecomposition::conjugated(const Matrix& g) const {
    if (!g.inverse().has_value()) throw std::invalid_argument("conjugation by a singular matrix");
    return make(apply(g, v1_), apply(g, v2_), apply(g, w1_), apply(g, w2_));
}

namespace {

/// Iterate `step` from `start` until two consecutive terms agree; the
/// repeated term stays in the chain. Dimensions change strictly until
/// stabilization, so dim+2 entries always suffice.
std::vector<Subspace> iterate_chain(Subspace start,
                                    const std::function<Subspace(const Subspace&)>& step,
                                    std::size_t ambient_dim) {
    std::vector<Subspace> chain{std::move(start)};
    for (std::size_t k = 0; k <= ambient_dim + 1; ++k) {
        Subspace next = step(chain.back());
        bool stable = next == chain.back();
        chain.push_back(std::move(next));
        if (stable) return chain;
    }
    throw std::logic_error("chain failed to stabilize within ambient_dim steps");
}

}  // namespace

ChainReport TwoSumDecomposition::chains() const {
    ChainReport out;
    const Subspace zero = Subspace::zero(field(), ambient_dim());
    const Subspace full = Subspace::full(field(), ambient_dim());

    auto f_step = [&](const Subspace& x) {
        Subspace acc = zero;
        for (std::size_t i = 1; i <= 2; ++i) {
            for (std::size_t j = 1; j <= 2; ++j) {
                acc = sum(acc, intersect(sum(x, v(i)), sum(x, w(j))));
            }
        }
        return acc;
    };
    auto ftilde_step = [&](const Subspace& x) {
        Subspace acc = full;
        for (std::size_t i = 1; i <= 2; ++i) {
            for (std::size_t j = 1; j <= 2; ++j) {
                acc = intersect(acc, sum(intersect(x, v(i)), intersect(x, w(j))));
            }
        }
        return acc;
    };
    auto f_sigma_step = [&](Sigma s) {
        return [&, s](const Subspace& x) {
            Subspace acc = zero;
            for (std::size_t i = 1; i <= 2; ++i) {
                acc = sum(acc, intersect(sum(x, v(i)), sum(x, w(sigma_apply(s, i)))));
            }
            return acc;
        };
    };
    auto ftilde_sigma_step = [&](Sigma s) {
        return [&, s](const Subspace& x) {
            Subspace acc = full;
            for (std::size_t i = 1; i <= 2; ++i) {
                acc = intersect(acc, sum(intersect(x, v(i)), intersect(x, w(sigma_apply(s, i)))));
            }
            return acc;
        };
    };

    out.f = iterate_chain(zero, f_step, ambient_dim());
    out.ftilde = iterate_chain(full, ftilde_step, ambient_dim());
    out.f_e = iterate_chain(zero, f_sigma_step(Sigma::e), ambient_dim());
    out.f_tau = iterate_chain(zero, f_sigma_step(Sigma::tau), ambient_dim());
    out.ftilde_e = iterate_chain(full, ftilde_sigma_step(Sigma::e), ambient_dim());
    out.ftilde_tau = iterate_chain(full, ftilde_sigma_step(Sigma::tau), ambient_dim());
    return out;
}

CanonicalSplit TwoSumDecomposition::canonical_split() const {
    return canonical_split(chains());
}

CanonicalSplit TwoSumDecomposition::canonical_split(const ChainReport& ch) const {
    return CanonicalSplit{ch.f_e.back(), ch.f_tau.back(), ch.ftilde.back()};
}

namespace {

const Subspace& at_or_last(const std::vector<Subspace>& chain, std::size_t n) {
    return n < chain.size() ? chain[n] : chain.back();
}

/// Aggregates a ranged identity into a single clause; keeps the first
/// counterexample as witness data.
class RangedCheck {
public:
    void expect(bool ok, const std::string& witness) {
        if (!ok && ok_) {
            ok_ = false;
            detail_ = witness;
        }
    }
    bool ok() const { return ok_; }
    const std::string& detail() const { return detail_; }

private:
    bool ok_ = true;
    std::string detail_;
};

std::string witness_eq(std::size_t n, const Subspace& lhs, const Subspace& rhs) {
    std::ostringstream os;
    os << "n=" << n << ": lhs=" << lhs.str() << " rhs=" << rhs.str();
    return os.str();
}

}  // namespace

TheoremReport TwoSumDecomposition::verify_chain_identities() const {
    TheoremReport rep("two_sum_chain_identities");
    const std::size_t N = ambient_dim();
    const FieldSpec fld = field();
    const Subspace zero = Subspace::zero(fld, N);
    const ChainReport ch = chains();

    // All four ways of writing the commutator coincide.
    {
        Matrix t1 = q1_ * p1_ - p1_ * q1_;
        Matrix t2 = q2_ * p2_ - p2_ * q2_;
        Matrix t3 = p2_ * q1_ - q1_ * p2_;
        Matrix t4 = p1_ * q2_ - q2_ * p1_;
        rep.check("theta_four_expressions", t1 == theta_ && t2 == theta_ && t3 == theta_ && t4 == theta_,
                  "commutator expressions disagree");
    }
    rep.check("projectors_idempotent",
              p1_ * p1_ == p1_ && p2_ * p2_ == p2_ && q1_ * q1_ == q1_ && q2_ * q2_ == q2_);
    rep.check("projectors_sum_to_identity",
              p1_ + p2_ == Matrix::identity(fld, N) && q1_ + q2_ == Matrix::identity(fld, N));

    // theta swaps the members of each pair.
    {
        RangedCheck rc;
        for (std::size_t i = 1; i <= 2; ++i) {
            rc.expect(v(3 - i).contains(apply(theta_, v(i))), "theta(V_i) escapes V_{tau(i)}, i=" + std::to_string(i));
            rc.expect(w(3 - i).contains(apply(theta_, w(i))), "theta(W_i) escapes W_{tau(i)}, i=" + std::to_string(i));
        }
        rep.check("theta_swaps_pairs", rc.ok(), rc.detail());
    }

    // Kernel and image powers reproduce the chains.
    {
        RangedCheck kernels, images;
        for (std::size_t n = 0; n <= N; ++n) {
            Subspace ker = Subspace::from_rows(theta_.matpow_kernel(n));
            Subspace im = Subspace::from_rows(theta_.pow(n).image());
            kernels.expect(ker == at_or_last(ch.f, n), witness_eq(n, ker, at_or_last(ch.f, n)));
            images.expect(im == at_or_last(ch.ftilde, n), witness_eq(n, im, at_or_last(ch.ftilde, n)));
        }
        rep.check("ker_theta_pow_matches_f", kernels.ok(), kernels.detail());
        rep.check("im_theta_pow_matches_ftilde", images.ok(), images.detail());
    }

    // One chain step is one application of theta (preimage / image).
    {
        RangedCheck pre, im;
        for (std::size_t n = 0; n + 1 <= N; ++n) {
            const Subspace& fn = at_or_last(ch.f, n);
            const Subspace& fn1 = at_or_last(ch.f, n + 1);
            pre.expect(fn1 == preimage(theta_, fn), witness_eq(n, fn1, preimage(theta_, fn)));
            const Subspace& gn = at_or_last(ch.ftilde, n);
            const Subspace& gn1 = at_or_last(ch.ftilde, n + 1);
            im.expect(gn1 == apply(theta_, gn), witness_eq(n, gn1, apply(theta_, gn)));
        }
        rep.check("f_step_is_theta_preimage", pre.ok(), pre.detail());
        rep.check("ftilde_step_is_theta_image", im.ok(), im.detail());
    }

    // F(1) is the direct sum of the four corner intersections.
    {
        std::vector<Subspace> corners;
        for (std::size_t i = 1; i <= 2; ++i) {
            for (std::size_t j = 1; j <= 2; ++j) corners.push_back(intersect(v(i), w(j)));
        }
        Subspace total = zero;
        for (const auto& c : corners) total = sum(total, c);
        rep.check("f1_is_direct_sum_of_corners",
                  is_independent(corners) && total == at_or_last(ch.f, 1),
                  "corner intersections do not assemble F(1)");
        Subspace fe1 = at_or_last(ch.f_e, 1);
        Subspace ft1 = at_or_last(ch.f_tau, 1);
        rep.check("f1_splits_by_sigma",
                  fe1 == sum(intersect(v1_, w1_), intersect(v2_, w2_)) &&
                      ft1 == sum(intersect(v1_, w2_), intersect(v2_, w1_)) &&
                      is_independent(std::vector<Subspace>{fe1, ft1}) &&
                      sum(fe1, ft1) == at_or_last(ch.f, 1),
                  "F(1) does not split into the two sigma parts");
    }

    // The stable image chain splits along each pair and mixed pair.
    {
        RangedCheck rc;
        for (std::size_t n = 0; n <= N; ++n) {
            const Subspace& g = at_or_last(ch.ftilde, n);
            Subspace gv1 = intersect(g, v1_), gv2 = intersect(g, v2_);
            Subspace gw1 = intersect(g, w1_), gw2 = intersect(g, w2_);
            rc.expect(is_independent(std::vector<Subspace>{gv1, gv2}) && sum(gv1, gv2) == g,
                      witness_eq(n, sum(gv1, gv2), g));
            rc.expect(is_independent(std::vector<Subspace>{gw1, gw2}) && sum(gw1, gw2) == g,
                      witness_eq(n, sum(gw1, gw2), g));
        }
        rep.check("ftilde_n_splits_along_pairs", rc.ok(), rc.detail());

        RangedCheck mixed;
        const Subspace& g = ch.ftilde_inf();
        for (std::size_t i = 1; i <= 2; ++i) {
            for (std::size_t j = 1; j <= 2; ++j) {
                Subspace a = intersect(g, v(i)), b = intersect(g, w(j));
                mixed.expect(is_independent(std::vector<Subspace>{a, b}) && sum(a, b) == g,
                             witness_eq(0, sum(a, b), g));
            }
        }
        rep.check("ftilde_inf_mixed_splits", mixed.ok(), mixed.detail());
    }

    // Per-sigma chain identities.
    for (Sigma s : {Sigma::e, Sigma::tau}) {
        const std::string tag = std::string("_") + to_string(s);
        const auto& fs = ch.f_sigma(s);
        const auto& fsbar = ch.f_sigma(other(s));

        RangedCheck lowers, cohom, meets_other, meets_f1, mixed, homog;
        for (std::size_t n = 0; n <= N; ++n) {
            const Subspace& x = at_or_last(fs, n);

            if (n + 1 <= N) {
                const Subspace& x1 = at_or_last(fs, n + 1);
                lowers.expect(x.contains(apply(theta_, x1)),
                              "theta does not lower the chain at n=" + std::to_string(n));
            }
            cohom.expect(intersect(sum(x, v1_), sum(x, v2_)) == x,
                         witness_eq(n, intersect(sum(x, v1_), sum(x, v2_)), x));
            cohom.expect(intersect(sum(x, w1_), sum(x, w2_)) == x,
                         witness_eq(n, intersect(sum(x, w1_), sum(x, w2_)), x));
            meets_other.expect(intersect(x, at_or_last(fsbar, 1)).is_zero(),
                               witness_eq(n, intersect(x, at_or_last(fsbar, 1)), zero));
            if (n >= 1) {
                meets_f1.expect(intersect(x, at_or_last(ch.f, 1)) == at_or_last(fs, 1),
                                witness_eq(n, intersect(x, at_or_last(ch.f, 1)), at_or_last(fs, 1)));
            }
            Subspace xv1 = intersect(x, v1_), xv2 = intersect(x, v2_);
            Subspace xw1 = intersect(x, w1_), xw2 = intersect(x, w2_);
            homog.expect(is_independent(std::vector<Subspace>{xv1, xv2}) && sum(xv1, xv2) == x,
                         witness_eq(n, sum(xv1, xv2), x));
            homog.expect(is_independent(std::vector<Subspace>{xw1, xw2}) && sum(xw1, xw2) == x,
                         witness_eq(n, sum(xw1, xw2), x));
            for (std::size_t i = 1; i <= 2; ++i) {
                Subspace a = intersect(x, v(i));
                Subspace b = intersect(x, w(sigma_apply(other(s), i)));
                mixed.expect(is_independent(std::vector<Subspace>{a, b}) && sum(a, b) == x,
                             witness_eq(n, sum(a, b), x));
            }
        }
        rep.check("theta_lowers_f" + tag, lowers.ok(), lowers.detail());
        rep.check("f" + tag + "_cohomogeneous", cohom.ok(), cohom.detail());
        rep.check("f" + tag + "_meets_other_f1_trivially", meets_other.ok(), meets_other.detail());
        rep.check("f" + tag + "_meets_f1_in_first_term", meets_f1.ok(), meets_f1.detail());
        rep.check("f" + tag + "_homogeneous_along_pairs", homog.ok(), homog.detail());
        rep.check("f" + tag + "_mixed_split", mixed.ok(), mixed.detail());
    }

    // The two sigma chains assemble the kernel chain.
    {
        RangedCheck rc;
        for (std::size_t n = 0; n <= N; ++n) {
            Subspace fe = at_or_last(ch.f_e, n);
            Subspace ft = at_or_last(ch.f_tau, n);
            rc.expect(intersect(fe, ft).is_zero(), witness_eq(n, intersect(fe, ft), zero));
            rc.expect(sum(fe, ft) == at_or_last(ch.f, n),
                      witness_eq(n, sum(fe, ft), at_or_last(ch.f, n)));
        }
        rep.check("f_sigma_chains_assemble_f", rc.ok(), rc.detail());
    }

    // Modular exchange law (A+B0) ∩ (A0+B) = A0+B0+(A∩B) for nested pairs
    // drawn from the chains.
    {
        RangedCheck rc;
        auto run = [&](const Subspace& a0, const Subspace& a, const Subspace& b0, const Subspace& b) {
            Subspace lhs = intersect(sum(a, b0), sum(a0, b));
            Subspace rhs = sum(sum(a0, b0), intersect(a, b));
            rc.expect(lhs == rhs, "lhs=" + lhs.str() + " rhs=" + rhs.str());
        };
        for (std::size_t n = 0; n + 1 <= N; ++n) {
            for (std::size_t m = 0; m + 1 <= N; ++m) {
                run(at_or_last(ch.f, n), at_or_last(ch.f, n + 1), at_or_last(ch.f_e, m),
                    at_or_last(ch.f_e, m + 1));
                run(at_or_last(ch.f_tau, n), at_or_last(ch.f_tau, n + 1), at_or_last(ch.ftilde, m + 1),
                    at_or_last(ch.ftilde, m));
            }
        }
        rep.check("modular_exchange_on_chain_pairs", rc.ok(), rc.detail());
    }

    return rep;
}

}  // namespace sll
