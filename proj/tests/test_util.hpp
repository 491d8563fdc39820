#ifndef MMLAB_TEST_UTIL_HPP
#define MMLAB_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "mmlab/parse.hpp"
#include "mmlab/polynomial.hpp"

namespace mmlab::testutil {

inline RingPtr small_ring(size_t nvars, FieldSpec field = FieldSpec::rationals()) {
  std::vector<std::string> names = {"x", "y", "z", "w"};
  names.resize(nvars);
  return RingSpec::make(names, field);
}

inline Monomial random_monomial(std::mt19937& rng, size_t nvars, int max_exp) {
  std::uniform_int_distribution<int> dist(0, max_exp);
  std::vector<int> e(nvars);
  for (auto& x : e) x = dist(rng);
  return Monomial(e);
}

inline Polynomial random_poly(std::mt19937& rng, const RingPtr& ring,
                              int max_terms, int max_exp, int max_coeff) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k)
    terms.push_back(Term{Scalar(coeff(rng)),
                         random_monomial(rng, ring->nvars(), max_exp)});
  return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const RingPtr& ring,
                                      int max_terms, int max_exp,
                                      int max_coeff) {
  for (;;) {
    Polynomial p = random_poly(rng, ring, max_terms, max_exp, max_coeff);
    if (!p.is_zero()) return p;
  }
}

inline Polynomial P(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

}  // namespace mmlab::testutil

#endif
