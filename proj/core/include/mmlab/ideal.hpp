#ifndef MMLAB_IDEAL_HPP
#define MMLAB_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "mmlab/groebner.hpp"

namespace mmlab {

// Generator list with a shared cache of reduced Groebner bases, one per
// monomial order. Ideals are immutable; copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  // Reduced canonical basis under ord, computed once and cached.
  const GroebnerBasis& groebner(const MonomialOrder& ord) const;
  const GroebnerBasis& groebner() const;  // grevlex (the equality order)

  bool is_zero_ideal() const;
  bool is_unit_ideal() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> entries;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool contains(const Ideal& I, const Polynomial& f);
// Coefficients over I.gens() with sum coeff[j]*gens[j] == f, via the
// tracked-transformation basis; nullopt when f is not in I.
std::optional<std::vector<Polynomial>> membership_certificate(
    const Ideal& I, const Polynomial& f);

bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal eliminate(const Ideal& I, const std::vector<int>& var_indices);
// All g with g*f in I; f must be nonzero.
Ideal colon(const Ideal& I, const Polynomial& f);
Ideal colon_ideal(const Ideal& I, const Ideal& J);
// Rabinowitsch: f in sqrt(I) iff 1 in I + (1 - y*f) with fresh y.
bool radical_member(const Ideal& I, const Polynomial& f);
// Krull dimension of R/I via independent variable sets modulo the leading
// term ideal; -1 for the unit ideal.
int dimension(const Ideal& I);

}  // namespace mmlab

#endif
