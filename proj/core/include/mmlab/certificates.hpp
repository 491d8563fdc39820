#ifndef MMLAB_CERTIFICATES_HPP
#define MMLAB_CERTIFICATES_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mmlab/polynomial.hpp"

namespace mmlab {

// Shape constraints on certificate coefficients. Both parts optional and
// combinable: subring_vars restricts coefficient monomials to a variable
// subset; blocks restricts each coefficient so its product with the
// (block-homogeneous) generator matches the target's block degrees.
// Restrictions are fast paths; lower bounds proved only in full-ring mode.
struct Restriction {
  std::optional<std::vector<int>> subring_vars;
  std::optional<std::vector<std::vector<int>>> blocks;

  static Restriction full_ring() { return {}; }
  static Restriction subring(std::vector<int> vars) {
    Restriction r;
    r.subring_vars = std::move(vars);
    return r;
  }
  Restriction with_blocks(std::vector<std::vector<int>> b) const {
    Restriction r = *this;
    r.blocks = std::move(b);
    return r;
  }
  std::string describe() const;
};

struct CertificateQuery {
  Polynomial target;
  std::vector<Polynomial> generators;
  int degree_bound = 0;
  Restriction restriction;
};

// Explicit coefficients with sum coefficients[i]*generators[i] == target.
struct Certificate {
  std::vector<Polynomial> coefficients;
  int max_degree = 0;  // max total degree over the coefficients
};

// All monomials in the given variables of total degree <= max_deg,
// ascending by degree then by exponent vector; count C(|vars|+max_deg, max_deg).
std::vector<Monomial> monomial_basis(const RingPtr& ring,
                                     const std::vector<int>& vars,
                                     int max_deg);

// Macaulay-style exact linear system: one unknown per (generator, allowed
// coefficient monomial), one row per monomial occurring in any product or
// in the target.
struct LinearSystem {
  RingPtr ring;
  std::vector<std::pair<int, Monomial>> unknowns;
  std::vector<std::map<int, Scalar>> rows;
  std::vector<Scalar> rhs;
  std::vector<Monomial> row_monomials;

  size_t n_unknowns() const { return unknowns.size(); }
  size_t n_rows() const { return rows.size(); }
  // Extra constraint unknown[col] == value.
  void pin(size_t col, const Scalar& value);
  // Pin generator gen's whole coefficient to a fixed polynomial; returns
  // false (infeasible) if the value needs a monomial outside the slot set.
  bool pin_coefficient(int gen, const Polynomial& value);
};

LinearSystem build_system(const CertificateQuery& query);

// Exact sparse Gaussian elimination; nullopt is a proof of infeasibility.
// Solutions are deterministic: free unknowns zero, pivots back-substituted.
std::optional<std::vector<Scalar>> solve_exact(const LinearSystem& sys,
                                               const FieldSpec& field);

// Assembles and verifies the certificate for a solved system; throws
// std::logic_error if re-expansion does not reproduce the target.
Certificate extract_certificate(const LinearSystem& sys,
                                const CertificateQuery& query,
                                const std::vector<Scalar>& values);

// Smallest D <= D_max admitting a certificate, with the certificate.
std::optional<std::pair<int, Certificate>> min_certificate_degree(
    const Polynomial& target, const std::vector<Polynomial>& generators,
    int d_max, const Restriction& restriction);

}  // namespace mmlab

#endif
