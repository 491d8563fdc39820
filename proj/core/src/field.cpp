#include "mmlab/field.hpp"

namespace mmlab {

FieldSpec FieldSpec::prime_field(unsigned long p) {
  mpz_class n(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("prime_field: " + std::to_string(p) +
                                " is not prime");
  return FieldSpec(p);
}

Scalar FieldSpec::reduce(const Scalar& v) const {
  if (p_ == 0) {
    Scalar r = v;
    r.canonicalize();
    return r;
  }
  mpz_class p(p_);
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  if (den != 1) {
    // Clear the denominator inside F_p.
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible mod p");
    num *= dinv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (p_ == 0) {
    Scalar r = reduce(a);
    if (r == 0) throw std::domain_error("division by zero");
    return 1 / r;
  }
  Scalar r = reduce(a);
  if (r == 0) throw std::domain_error("division by zero");
  mpz_class p(p_), inv;
  mpz_class num = r.get_num();
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("element not invertible mod p");
  return Scalar(inv);
}

std::string FieldSpec::to_string() const {
  if (p_ == 0) return "Q";
  return "Fp(" + std::to_string(p_) + ")";
}

}  // namespace mmlab
