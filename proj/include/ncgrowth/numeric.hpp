#pragma once

// Exact scalar types shared by every module: arbitrary precision rationals
// (GMP) and elements of a prime field with a runtime modulus.

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncgrowth
{

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "7", "-3", "22/7".
inline Rational parse_rational(std::string_view text)
{
    Rational r;
    if (r.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("not a rational number: " + std::string(text));
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: " + std::string(text));
    }
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational &r)
{
    return r.get_str();
}

inline std::string to_string(const Integer &z)
{
    return z.get_str();
}

inline bool is_zero(const Rational &r)
{
    return sgn(r) == 0;
}

inline Rational inverse(const Rational &r)
{
    if (is_zero(r)) {
        throw std::domain_error("division by zero");
    }
    return Rational(1) / r;
}

inline Rational pow(const Rational &base, unsigned exp)
{
    Rational out(1);
    for (unsigned i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

inline bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

// Element of Z/pZ.  The modulus travels with the value so that generic
// algorithms never need a separate field object; mixing moduli is a bug.
class ModP
{
public:
    ModP() = default;
    ModP(std::uint64_t value, std::uint32_t modulus) : modulus_(modulus)
    {
        if (modulus == 0 && value == 0) {
            return;
        }
        if (modulus < 2) {
            throw std::invalid_argument("modulus must be at least 2");
        }
        value_ = static_cast<std::uint32_t>(value % modulus);
    }

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return modulus_; }

    friend ModP operator+(ModP a, ModP b)
    {
        const auto m = common(a, b);
        return ModP(static_cast<std::uint64_t>(a.value_) + b.value_, m);
    }
    friend ModP operator-(ModP a, ModP b)
    {
        const auto m = common(a, b);
        return ModP(static_cast<std::uint64_t>(a.value_) + m - b.value_, m);
    }
    friend ModP operator*(ModP a, ModP b)
    {
        const auto m = common(a, b);
        return ModP(static_cast<std::uint64_t>(a.value_) * b.value_, m);
    }
    friend ModP operator/(ModP a, ModP b) { return a * inverse(b); }
    ModP operator-() const { return value_ == 0 ? *this : ModP(modulus_ - value_, modulus_); }
    ModP &operator+=(ModP o) { return *this = *this + o; }
    ModP &operator-=(ModP o) { return *this = *this - o; }
    ModP &operator*=(ModP o) { return *this = *this * o; }
    ModP &operator/=(ModP o) { return *this = *this / o; }
    friend bool operator==(ModP a, ModP b) { return a.value_ == b.value_; }

    friend ModP inverse(ModP a)
    {
        if (a.value_ == 0) {
            throw std::domain_error("division by zero in prime field");
        }
        // Fermat: a^(p-2).
        std::uint64_t result = 1, base = a.value_, e = a.modulus_ - 2;
        while (e > 0) {
            if (e & 1U) {
                result = result * base % a.modulus_;
            }
            base = base * base % a.modulus_;
            e >>= 1U;
        }
        return ModP(result, a.modulus_);
    }
    friend bool is_zero(ModP a) { return a.value_ == 0; }
    friend std::string to_string(ModP a) { return std::to_string(a.value_); }
    friend std::ostream &operator<<(std::ostream &os, ModP a) { return os << a.value_; }

private:
    static std::uint32_t common(ModP a, ModP b)
    {
        // A default-constructed element (modulus 0) is a zero of any field.
        if (a.modulus_ == 0) {
            return b.modulus_;
        }
        if (b.modulus_ != 0 && a.modulus_ != b.modulus_) {
            throw std::logic_error("mixed prime-field moduli");
        }
        return a.modulus_;
    }

    std::uint32_t value_ = 0;
    std::uint32_t modulus_ = 0;
};

ModP inverse(ModP a);
bool is_zero(ModP a);
std::string to_string(ModP a);

inline bool is_prime(std::uint32_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

// Coefficient field of a presentation: characteristic 0 means the rationals.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    bool rational() const { return characteristic == 0; }
    std::string name() const { return rational() ? "Q" : "F" + std::to_string(characteristic); }
    friend bool operator==(const FieldSpec &, const FieldSpec &) = default;
};

template <typename K>
K field_element(const Rational &value, const FieldSpec &field);

template <>
inline Rational field_element<Rational>(const Rational &value, const FieldSpec &field)
{
    if (!field.rational()) {
        throw std::logic_error("rational coefficients requested for a prime field");
    }
    return value;
}

template <>
inline ModP field_element<ModP>(const Rational &value, const FieldSpec &field)
{
    if (field.rational()) {
        throw std::logic_error("prime-field coefficients requested for the rationals");
    }
    const auto p = field.characteristic;
    auto reduce = [p](const Integer &z) {
        Integer m = z % p;
        if (m < 0) {
            m += p;
        }
        return ModP(m.get_ui(), p);
    };
    const ModP den = reduce(value.get_den());
    if (is_zero(den)) {
        throw std::invalid_argument("coefficient " + value.get_str() + " is undefined in characteristic " +
                                    std::to_string(p));
    }
    return reduce(value.get_num()) / den;
}

} // namespace ncgrowth
