#ifndef RETRACTLAB_FIELD_HPP
#define RETRACTLAB_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "retractlab/errors.hpp"

namespace retractlab {

enum class FieldKind { Rationals, PrimeField };

/// An exact coefficient field: the rationals, or the prime field of a
/// verified prime p. Field elements are carried as mpq_class values; for
/// a prime field they are reduced representatives in [0, p-1] with
/// denominator 1.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

    /// Throws DomainError unless p is prime.
    static FieldSpec prime_field(const mpz_class& p);

    FieldKind kind() const { return kind_; }

    /// 0 for the rationals, p for a prime field.
    const mpz_class& characteristic() const { return p_; }

    bool operator==(const FieldSpec& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    /// Canonical representative of a rational value in this field.
    /// Over F_p the denominator is inverted mod p; a denominator divisible
    /// by p is rejected.
    mpq_class reduce(const mpq_class& a) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    /// Throws DomainError on division by zero.
    mpq_class div(const mpq_class& a, const mpq_class& b) const;
    mpq_class inv(const mpq_class& a) const;

    /// "Q" or "F<p>".
    std::string to_string() const;

private:
    FieldSpec(FieldKind kind, mpz_class p) : kind_(kind), p_(std::move(p)) {}

    FieldKind kind_;
    mpz_class p_;
};

} // namespace retractlab

#endif
