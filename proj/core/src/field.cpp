#include "sll/field.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

namespace sll {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid on (a, p) with p prime and a != 0 mod p.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("element is not invertible mod p");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("invalid number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p == 2) {
        throw std::invalid_argument("GF(2) is not supported: the characteristic must differ from 2");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("GF(" + std::to_string(p) + "): modulus is not prime");
    }
    FieldSpec f;
    f.kind = Kind::prime;
    f.modulus = p;
    return f;
}

FieldSpec FieldSpec::parse(std::string_view token) {
    if (token == "q") return rationals();
    constexpr std::string_view prefix = "gf:";
    if (token.substr(0, prefix.size()) == prefix) {
        std::uint64_t p = parse_u64(token.substr(prefix.size()));
        if (p > 0xFFFFFFFFull) throw std::invalid_argument("prime modulus too large");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field '" + std::string(token) + "' (expected \"q\" or \"gf:<p>\")");
}

std::string FieldSpec::name() const {
    return kind == Kind::rationals ? "q" : "gf:" + std::to_string(modulus);
}

Scalar::Scalar(const FieldSpec& field, long long value) {
    if (field.kind == FieldSpec::Kind::rationals) {
        value_ = mpq_class(static_cast<long>(value));
    } else {
        std::int64_t r = value % static_cast<std::int64_t>(field.modulus);
        if (r < 0) r += field.modulus;
        value_ = PrimeElt{static_cast<std::uint32_t>(r), field.modulus};
    }
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::from_mpq(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    std::string s(text);
    if (s.find_first_of(".eE") != std::string::npos) {
        throw std::invalid_argument("scalar literals must be decimal-free: '" + s + "'");
    }
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw std::invalid_argument("malformed fraction: '" + s + "'");
    }
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw std::invalid_argument("invalid integer: '" + num + "'");
    if (d.set_str(den, 10) != 0) throw std::invalid_argument("invalid integer: '" + den + "'");
    if (d == 0) throw std::domain_error("zero denominator in '" + s + "'");
    if (field.kind == FieldSpec::Kind::rationals) {
        mpq_class q(n, d);
        q.canonicalize();
        return Scalar(std::move(q));
    }
    const std::uint32_t p = field.modulus;
    auto residue = [&](const mpz_class& z) {
        mpz_class r = z % p;
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r.get_ui());
    };
    std::uint32_t nr = residue(n);
    std::uint32_t dr = residue(d);
    if (dr == 0) throw std::domain_error("denominator divisible by p in '" + s + "'");
    std::uint64_t v = static_cast<std::uint64_t>(nr) * mod_inverse(dr, p) % p;
    return Scalar(PrimeElt{static_cast<std::uint32_t>(v), p});
}

FieldSpec Scalar::field() const {
    if (const auto* e = prime_elt()) return FieldSpec{FieldSpec::Kind::prime, e->p};
    return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
    if (const auto* e = prime_elt()) return e->value == 0;
    return sgn(*rat()) == 0;
}

bool Scalar::is_one() const {
    if (const auto* e = prime_elt()) return e->value == 1;
    return *rat() == 1;
}

Scalar Scalar::operator-() const {
    if (const auto* e = prime_elt()) {
        return Scalar(PrimeElt{e->value == 0 ? 0 : e->p - e->value, e->p});
    }
    return Scalar(mpq_class(-*rat()));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (const auto* e = prime_elt()) {
        return Scalar(PrimeElt{mod_inverse(e->value, e->p), e->p});
    }
    return Scalar(mpq_class(1 / *rat()));
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    const auto* ea = a.prime_elt();
    const auto* eb = b.prime_elt();
    if ((ea == nullptr) != (eb == nullptr) || (ea && eb && ea->p != eb->p)) {
        throw FieldMismatchError("scalar arithmetic across different fields");
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(*this, rhs);
    if (auto* e = std::get_if<PrimeElt>(&value_)) {
        e->value = (e->value + rhs.prime_elt()->value) % e->p;
    } else {
        std::get<mpq_class>(value_) += *rhs.rat();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(*this, rhs);
    if (auto* e = std::get_if<PrimeElt>(&value_)) {
        e->value = (e->value + e->p - rhs.prime_elt()->value) % e->p;
    } else {
        std::get<mpq_class>(value_) -= *rhs.rat();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(*this, rhs);
    if (auto* e = std::get_if<PrimeElt>(&value_)) {
        e->value = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(e->value) * rhs.prime_elt()->value % e->p);
    } else {
        std::get<mpq_class>(value_) *= *rhs.rat();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.value_ == rhs.value_;
}

int Scalar::cmp(const Scalar& rhs) const {
    require_same_field(*this, rhs);
    if (const auto* e = prime_elt()) {
        const auto* f = rhs.prime_elt();
        return e->value < f->value ? -1 : (e->value > f->value ? 1 : 0);
    }
    return ::cmp(*rat(), *rhs.rat());
}

std::size_t Scalar::hash() const noexcept {
    auto mix = [](std::size_t h, std::size_t v) {
        return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    };
    if (const auto* e = prime_elt()) {
        return mix(e->p, e->value);
    }
    const mpq_class& q = *rat();
    std::size_t hn = mpz_fdiv_ui(q.get_num().get_mpz_t(), 0xFFFFFFFBu);
    std::size_t hd = mpz_fdiv_ui(q.get_den().get_mpz_t(), 0xFFFFFFFBu);
    std::size_t hs = sgn(q) < 0 ? 0x5bd1e995u : 0;
    return mix(mix(hn, hd), hs);
}

std::string Scalar::str() const {
    if (const auto* e = prime_elt()) return std::to_string(e->value);
    return rat()->get_str();
}

}  // namespace sll
