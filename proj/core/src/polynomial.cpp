#include "sll/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "sll/errors.hpp"

namespace sll {

Polynomial::Polynomial(FieldSpec field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.field() != field_) throw FieldMismatchError("polynomial coefficient field");
    }
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
    return Polynomial(c.field(), {c});
}

Polynomial Polynomial::x(const FieldSpec& field) {
    return Polynomial(field, {Scalar::zero(field), Scalar::one(field)});
}

Polynomial Polynomial::x_minus(const Scalar& c) {
    return Polynomial(c.field(), {-c, Scalar::one(c.field())});
}

const Scalar& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Scalar Polynomial::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return Scalar::zero(field_);
}

bool Polynomial::is_monic() const {
    return !is_zero() && leading().is_one();
}

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    return leading().inverse() * *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.field_ != b.field_) throw FieldMismatchError("polynomial addition across fields");
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.field_ != b.field_) throw FieldMismatchError("polynomial product across fields");
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field_);
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
    Polynomial out = p;
    for (auto& c : out.coeffs_) c *= s;
    out.trim();
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (field_ != divisor.field_) throw FieldMismatchError("polynomial division across fields");
    Polynomial remainder = *this;
    Polynomial quotient(field_);
    Scalar lead_inv = divisor.leading().inverse();
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
        std::size_t shift = static_cast<std::size_t>(remainder.degree() - divisor.degree());
        Scalar factor = remainder.leading() * lead_inv;
        std::vector<Scalar> term(shift + 1, Scalar::zero(field_));
        term[shift] = factor;
        Polynomial t(field_, std::move(term));
        quotient = quotient + t;
        remainder = remainder - t * divisor;
    }
    return {std::move(quotient), std::move(remainder)};
}

bool Polynomial::divides(const Polynomial& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).remainder.is_zero();
}

Scalar Polynomial::evaluate(const Scalar& at) const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * at + coeffs_[i];
    }
    return acc;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string mag = negative ? cs.substr(1) : cs;
        if (i == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag;
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

/// Matrix of polynomials, used only for the Smith normal form of xI - a.
class PolyMatrix {
public:
    PolyMatrix(const FieldSpec& field, std::size_t n)
        : field_(field), n_(n), entries_(n * n, Polynomial::zero(field)) {}

    Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
    std::size_t size() const { return n_; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < n_; ++c) std::swap(at(a, c), at(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < n_; ++r) std::swap(at(r, a), at(r, b));
    }
    void add_row_multiple(std::size_t dst, std::size_t src, const Polynomial& f) {
        for (std::size_t c = 0; c < n_; ++c) at(dst, c) = at(dst, c) + f * at(src, c);
    }
    void add_col_multiple(std::size_t dst, std::size_t src, const Polynomial& f) {
        for (std::size_t r = 0; r < n_; ++r) at(r, dst) = at(r, dst) + f * at(r, src);
    }

private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<Polynomial> entries_;
};

}  // namespace

std::vector<Polynomial> invariant_factors(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatchError("invariant factors of a non-square matrix");
    const FieldSpec field = a.field();
    const std::size_t n = a.rows();

    PolyMatrix m(field, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m.at(r, c) = r == c ? Polynomial::x_minus(a.at(r, c)) : Polynomial::constant(-a.at(r, c));
        }
    }

    // Smith normal form by repeated division; entries of K[x] form a
    // Euclidean domain graded by degree.
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Minimal-degree nonzero entry of the trailing block to (t, t).
            long best = -1;
            std::size_t br = t, bc = t;
            for (std::size_t r = t; r < n; ++r) {
                for (std::size_t c = t; c < n; ++c) {
                    if (m.at(r, c).is_zero()) continue;
                    if (best < 0 || m.at(r, c).degree() < best) {
                        best = m.at(r, c).degree();
                        br = r;
                        bc = c;
                    }
                }
            }
            if (best < 0) {
                t = n;  // trailing block is zero
                break;
            }
            if (br != t) m.swap_rows(br, t);
            if (bc != t) m.swap_cols(bc, t);

            bool reduced_any = false;
            for (std::size_t r = t + 1; r < n; ++r) {
                if (m.at(r, t).is_zero()) continue;
                Polynomial q = m.at(r, t).divmod(m.at(t, t)).quotient;
                m.add_row_multiple(r, t, -q);
                if (!m.at(r, t).is_zero()) reduced_any = true;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (m.at(t, c).is_zero()) continue;
                Polynomial q = m.at(t, c).divmod(m.at(t, t)).quotient;
                m.add_col_multiple(c, t, -q);
                if (!m.at(t, c).is_zero()) reduced_any = true;
            }
            if (reduced_any) continue;

            // Pivot divides its row and column; ensure it divides the rest of
            // the block, otherwise pull an offending row in and start over.
            bool divides_all = true;
            for (std::size_t r = t + 1; r < n && divides_all; ++r) {
                for (std::size_t c = t + 1; c < n; ++c) {
                    if (!m.at(t, t).divides(m.at(r, c))) {
                        m.add_row_multiple(t, r, Polynomial::constant(Scalar::one(field)));
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
        }
        if (t >= n) break;
    }

    std::vector<Polynomial> factors;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial d = m.at(i, i).monic();
        if (d.degree() > 0) factors.push_back(std::move(d));
    }
    return factors;
}

}  // namespace sll
