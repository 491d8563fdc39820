#ifndef MMLAB_GROEBNER_HPP
#define MMLAB_GROEBNER_HPP

#include <optional>
#include <vector>

#include "mmlab/polynomial.hpp"

namespace mmlab {

// f = sum quotients[i]*divisors[i] + remainder, no remainder term divisible
// by any divisor's leading monomial, lm(q_i g_i) <= lm(f).
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord);

enum class PairStrategy {
  MinDegree,  // normal strategy: smallest lcm degree first
  FirstCome,  // insertion order; exists to cross-check canonicity
};

struct BuchbergerOptions {
  bool track = false;  // maintain the transformation matrix
  PairStrategy strategy = PairStrategy::MinDegree;
};

// Reduced (canonical) Groebner basis: monic elements, no term of one
// divisible by another's leading monomial, sorted by ascending leading
// monomial. Zero ideal -> empty; unit ideal -> [1].
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> elements;
  // transformation[k][j]: coefficient of original generator j in element k.
  std::optional<std::vector<std::vector<Polynomial>>> transformation;

  bool is_unit() const {
    return elements.size() == 1 && elements[0].is_constant() &&
           !elements[0].is_zero();
  }
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord,
                         const BuchbergerOptions& opts = {});

// Minimalize + tail-reduce a basis already satisfying Buchberger's
// criterion; idempotent.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace mmlab

#endif
