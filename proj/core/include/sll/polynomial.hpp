#pragma once

#include <string>
#include <vector>

#include "sll/field.hpp"
#include "sll/matrix.hpp"

namespace sll {

/// Dense univariate polynomial over one field. Coefficients are stored low
/// degree first with no trailing zeros; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
public:
    explicit Polynomial(FieldSpec field) : field_(field) {}
    Polynomial(FieldSpec field, std::vector<Scalar> coeffs);

    static Polynomial zero(const FieldSpec& field) { return Polynomial(field); }
    static Polynomial constant(const Scalar& c);
    static Polynomial x(const FieldSpec& field);
    /// x - c.
    static Polynomial x_minus(const Scalar& c);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const Scalar& leading() const;
    Scalar coeff(std::size_t i) const;
    bool is_monic() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    struct DivMod;
    DivMod divmod(const Polynomial& divisor) const;  // throws std::domain_error on zero divisor
    bool divides(const Polynomial& other) const;

    Scalar evaluate(const Scalar& at) const;

    /// Monic gcd (zero if both zero).
    friend Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Rendering like "x^2 - 1/2x + 3".
    std::string str(const std::string& var = "x") const;

private:
    void trim();

    FieldSpec field_;
    std::vector<Scalar> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Invariant factors of a square matrix: the nonconstant diagonal entries of
/// the Smith normal form of xI - a over K[x], monic and in divisibility order.
/// Their product is the characteristic polynomial; together they classify `a`
/// up to conjugacy.
std::vector<Polynomial> invariant_factors(const Matrix& a);

}  // namespace sll
