#ifndef MMLAB_POLYNOMIAL_HPP
#define MMLAB_POLYNOMIAL_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mmlab/ring.hpp"

namespace mmlab {

struct Term {
  Scalar coeff;
  Monomial mono;

  bool operator==(const Term& o) const {
    return mono == o.mono && coeff == o.coeff;
  }
  bool operator!=(const Term& o) const { return !(*this == o); }
};

// Canonical multivariate polynomial: nonzero coefficients, no duplicate
// monomials, terms strictly descending under the ring's default order.
// The zero polynomial has an empty term list. Values are immutable in
// practice; all operations return new polynomials.
class Polynomial {
 public:
  Polynomial() = default;  // empty shell, only for containers
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, size_t index, int exp = 1);
  static Polynomial monomial(RingPtr ring, const Scalar& c, Monomial m);
  // Canonicalizes: reduces coefficients, merges duplicates, drops zeros,
  // sorts descending under the ring's default order.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  size_t term_count() const { return terms_.size(); }
  // -1 for the zero polynomial.
  int total_degree() const;

  // Leading term under the storage (ring default) order; throws on zero.
  const Term& leading_term() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scale(const Scalar& c) const;
  // c * m * this.
  Polynomial mono_mul(const Scalar& c, const Monomial& m) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;

  // Structural equality of canonical forms (order-robust multiset compare).
  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Leading term of f under an arbitrary order (linear scan; f's storage
// order need not match). Throws on zero.
const Term& leading_term_under(const Polynomial& f, const MonomialOrder& ord);

// Shared per-block degree if f is block-homogeneous, std::nullopt otherwise.
// blocks holds disjoint variable index sets; throws on out-of-range indices.
std::optional<Bidegree> multidegree(const Polynomial& f,
                                    const std::vector<std::vector<int>>& blocks);

Polynomial embed(const RingExtension& ext, const Polynomial& f);
Polynomial restrict(const RingExtension& ext, const Polynomial& f);

namespace detail {
// Working representation for order-parameterized algorithms: a term vector
// sorted strictly descending under an explicit order.
std::vector<Term> sort_terms(std::vector<Term> terms, const MonomialOrder& ord,
                             const FieldSpec& field);
// a - c*m*b, both inputs sorted under ord, result sorted under ord.
std::vector<Term> sub_mul(const std::vector<Term>& a, const Scalar& c,
                          const Monomial& m, const std::vector<Term>& b,
                          const MonomialOrder& ord, const FieldSpec& field);
void require_same_ring(const Polynomial& f, const Polynomial& g);
}  // namespace detail

}  // namespace mmlab

#endif
