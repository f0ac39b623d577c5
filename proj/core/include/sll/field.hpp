#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "sll/errors.hpp"

namespace sll {

/// The coefficient field: arbitrary-precision rationals or GF(p) for an odd
/// prime p. Characteristic 2 is rejected because 1/2 enters the projection
/// formulas used throughout.
struct FieldSpec {
    enum class Kind : std::uint8_t { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t modulus = 0;  // set when kind == prime

    static FieldSpec rationals() noexcept { return FieldSpec{}; }
    static FieldSpec prime(std::uint32_t p);  // throws unless p is an odd prime

    /// Parse "q" (rationals) or "gf:<p>".
    static FieldSpec parse(std::string_view token);

    bool is_prime_field() const noexcept { return kind == Kind::prime; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// An immutable element of a FieldSpec field. Rationals are kept reduced with
/// positive denominator; prime-field residues are kept in [0, p).
class Scalar {
public:
    /// Rational zero.
    Scalar() : value_(mpq_class(0)) {}

    Scalar(const FieldSpec& field, long long value);

    static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
    static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
    static Scalar rational(long long num, long long den);
    static Scalar from_mpq(mpq_class q);

    /// Parse "a" or "a/b" (decimal-free). Over GF(p), "a/b" means a * b^-1.
    static Scalar parse(const FieldSpec& field, std::string_view text);

    FieldSpec field() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws std::domain_error on zero

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& lhs, const Scalar& rhs);
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

    /// Total order within one field: numeric for rationals, residue order for
    /// GF(p). Used for the canonical ordering of subspaces and lattices.
    int cmp(const Scalar& rhs) const;

    std::size_t hash() const noexcept;

    /// Canonical text: "a" or "a/b" for rationals, the residue for GF(p).
    std::string str() const;

private:
    struct PrimeElt {
        std::uint32_t value;
        std::uint32_t p;
        friend bool operator==(const PrimeElt&, const PrimeElt&) = default;
    };

    explicit Scalar(PrimeElt e) : value_(e) {}
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}

    const PrimeElt* prime_elt() const { return std::get_if<PrimeElt>(&value_); }
    const mpq_class* rat() const { return std::get_if<mpq_class>(&value_); }

    static void require_same_field(const Scalar& a, const Scalar& b);

    std::variant<mpq_class, PrimeElt> value_;
};

}  // namespace sll
