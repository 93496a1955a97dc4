#include "retractlab/field.hpp"

namespace retractlab {

FieldSpec FieldSpec::prime_field(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
        throw DomainError("prime field characteristic must be prime, got " + p.get_str());
    }
    return FieldSpec(FieldKind::PrimeField, p);
}

mpq_class FieldSpec::reduce(const mpq_class& a) const {
    if (kind_ == FieldKind::Rationals) {
        mpq_class r = a;
        r.canonicalize();
        return r;
    }
    mpz_class num = a.get_num() % p_;
    if (num < 0) num += p_;
    mpz_class den = a.get_den() % p_;
    if (den < 0) den += p_;
    if (den == 0) {
        throw DomainError("denominator " + a.get_den().get_str() +
                          " is not invertible in " + to_string());
    }
    if (den != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0) {
            throw DomainError("denominator " + a.get_den().get_str() +
                              " is not invertible in " + to_string());
        }
        num = (num * dinv) % p_;
    }
    return mpq_class(num);
}

mpq_class FieldSpec::add(const mpq_class& a, const mpq_class& b) const {
    return reduce(a + b);
}

mpq_class FieldSpec::sub(const mpq_class& a, const mpq_class& b) const {
    return reduce(a - b);
}

mpq_class FieldSpec::mul(const mpq_class& a, const mpq_class& b) const {
    return reduce(a * b);
}

mpq_class FieldSpec::neg(const mpq_class& a) const {
    return reduce(-a);
}

mpq_class FieldSpec::div(const mpq_class& a, const mpq_class& b) const {
    if (b == 0) throw DomainError("division by zero in " + to_string());
    if (kind_ == FieldKind::Rationals) return reduce(a / b);
    return mul(a, inv(b));
}

mpq_class FieldSpec::inv(const mpq_class& a) const {
    if (a == 0) throw DomainError("zero has no inverse in " + to_string());
    if (kind_ == FieldKind::Rationals) return reduce(1 / a);
    mpq_class r = reduce(a);
    mpz_class ainv;
    if (mpz_invert(ainv.get_mpz_t(), r.get_num().get_mpz_t(), p_.get_mpz_t()) == 0) {
        throw DomainError(a.get_str() + " has no inverse in " + to_string());
    }
    return mpq_class(ainv);
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? "Q" : "F" + p_.get_str();
}

} // namespace retractlab
