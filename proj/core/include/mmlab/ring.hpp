#ifndef MMLAB_RING_HPP
#define MMLAB_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmlab/field.hpp"

namespace mmlab {

// Exponent vector over a fixed variable set, total degree cached.
class Monomial {
 public:
  explicit Monomial(size_t nvars) : exps_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial one(size_t nvars) { return Monomial(nvars); }
  static Monomial var(size_t nvars, size_t i, int e = 1);

  size_t size() const { return exps_.size(); }
  int operator[](size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return deg_; }
  int degree_in(const std::vector<int>& var_indices) const;
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& m) const;
  Monomial mul(const Monomial& m) const;
  // Exact quotient; throws std::domain_error when not divisible.
  Monomial div(const Monomial& m) const;
  Monomial lcm(const Monomial& m) const;
  Monomial gcd(const Monomial& m) const;
  bool coprime(const Monomial& m) const;

  // Bitmask of variables with positive exponent (ring sizes here are small).
  uint64_t support() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  // Plain lexicographic compare on exponent vectors; used as an
  // order-independent tie-free key, not as a monomial order.
  bool lex_key_less(const Monomial& o) const { return exps_ < o.exps_; }

 private:
  std::vector<int> exps_;
  int deg_;
};

enum class OrderKind { Lex, GrevLex, Block };

// Total multiplicative well-ordering on monomials of one ring.
// Block(front, inner) is an elimination order: the `front` variables are
// compared first (grevlex among themselves), so any monomial involving a
// front variable exceeds every monomial free of them.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex); }
  static MonomialOrder block(std::vector<int> front_vars, MonomialOrder inner);

  OrderKind kind() const { return kind_; }
  // -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  // Stable identity string, e.g. "grevlex", "lex", "block[0]:grevlex".
  std::string key() const;

 private:
  explicit MonomialOrder(OrderKind k) : kind_(k) {}
  int compare_on(const Monomial& a, const Monomial& b,
                 const std::vector<int>& active) const;

  OrderKind kind_;
  std::vector<int> front_;  // Block only, sorted
  std::shared_ptr<const MonomialOrder> inner_;
};

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

// Ordered variable list + coefficient field + default computational order.
class RingSpec {
 public:
  static RingPtr make(std::vector<std::string> vars, FieldSpec field,
                      MonomialOrder default_order = MonomialOrder::grevlex());

  const std::vector<std::string>& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const FieldSpec& field() const { return field_; }
  const MonomialOrder& default_order() const { return order_; }
  const std::string& var_name(size_t i) const { return vars_[i]; }
  std::optional<size_t> var_index(const std::string& name) const;
  // var_index or throw std::invalid_argument.
  size_t var_index_checked(const std::string& name) const;

  bool same_ring(const RingSpec& o) const {
    return vars_ == o.vars_ && field_ == o.field_;
  }
  std::string to_string() const;

 private:
  RingSpec(std::vector<std::string> vars, FieldSpec field, MonomialOrder ord);
  std::vector<std::string> vars_;
  FieldSpec field_;
  MonomialOrder order_;
};

enum class ExtendPosition { Front, Back };

// Ring extension by fresh variables, with the index bookkeeping needed to
// embed old polynomials and restrict new-variable-free ones back.
struct RingExtension {
  RingPtr base;
  RingPtr extended;
  ExtendPosition position;
  size_t added;  // number of new variables

  // Indices of the new variables in the extended ring.
  std::vector<int> new_indices() const;
  Monomial embed(const Monomial& m) const;
  // Throws std::domain_error if m involves a new variable.
  Monomial restrict(const Monomial& m) const;
};

RingExtension extend_ring(const RingPtr& ring,
                          const std::vector<std::string>& new_vars,
                          ExtendPosition pos);

// Per-block degree vector of a block-homogeneous polynomial.
using Bidegree = std::vector<int>;

}  // namespace mmlab

#endif
