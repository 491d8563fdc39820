#ifndef MMLAB_FIELD_HPP
#define MMLAB_FIELD_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mmlab {

// Field elements are always mpq_class values. Over Q they are arbitrary
// rationals in lowest terms with positive denominator (mpq canonical form);
// over F_p they are integers in [0, p) with denominator 1. All arithmetic
// goes through FieldSpec so the same polynomial code serves both fields.
using Scalar = mpq_class;

class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }

  // Throws std::invalid_argument unless p is prime.
  static FieldSpec prime_field(unsigned long p);

  unsigned long characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const { return reduce(Scalar(v)); }

  // Canonical representative: lowest terms with positive denominator over Q,
  // reduction into [0, p) over F_p. Throws std::domain_error if a
  // denominator is divisible by p.
  Scalar reduce(const Scalar& v) const;

  // Arithmetic assumes canonical operands (GMP keeps rational results
  // canonical, so only F_p needs the reduction step).
  Scalar add(const Scalar& a, const Scalar& b) const {
    return p_ == 0 ? a + b : reduce(a + b);
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    return p_ == 0 ? a - b : reduce(a - b);
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    return p_ == 0 ? a * b : reduce(a * b);
  }
  Scalar neg(const Scalar& a) const { return p_ == 0 ? -a : reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string to_string() const;

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

 private:
  explicit FieldSpec(unsigned long p) : p_(p) {}
  unsigned long p_;  // 0 means Q
};

}  // namespace mmlab

#endif
