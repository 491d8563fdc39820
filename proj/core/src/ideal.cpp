#include "mmlab/ideal.hpp"

#include <algorithm>

namespace mmlab {

namespace {

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (!I.ring() || !J.ring() || !I.ring()->same_ring(*J.ring()))
    throw std::invalid_argument("ring mismatch");
}

void require_poly_ring(const Ideal& I, const Polynomial& f) {
  if (!I.ring() || !f.ring() || !I.ring()->same_ring(*f.ring()))
    throw std::invalid_argument("ring mismatch");
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (!ring_) throw std::invalid_argument("ideal needs a ring");
  for (const auto& g : gens_)
    if (!g.ring() || !g.ring()->same_ring(*ring_))
      throw std::invalid_argument("ring mismatch");
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord) const {
  const std::string key = ord.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return *it->second;
  }
  auto gb = std::make_shared<GroebnerBasis>(buchberger(gens_, ord));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->entries.emplace(key, std::move(gb));
  return *it->second;
}

const GroebnerBasis& Ideal::groebner() const {
  return groebner(MonomialOrder::grevlex());
}

bool Ideal::is_zero_ideal() const {
  for (const auto& g : gens_)
    if (!g.is_zero()) return false;
  return true;
}

bool Ideal::is_unit_ideal() const { return groebner().is_unit(); }

bool contains(const Ideal& I, const Polynomial& f) {
  require_poly_ring(I, f);
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  return normal_form(f, I.groebner()).is_zero();
}

std::optional<std::vector<Polynomial>> membership_certificate(
    const Ideal& I, const Polynomial& f) {
  require_poly_ring(I, f);
  const RingPtr& ring = I.ring();
  if (f.is_zero())
    return std::vector<Polynomial>(I.gens().size(), Polynomial::zero(ring));
  if (I.is_zero_ideal()) return std::nullopt;
  // Tracked basis is not cached: the transformation is paid for on demand.
  BuchbergerOptions opts;
  opts.track = true;
  GroebnerBasis gb = buchberger(I.gens(), MonomialOrder::grevlex(), opts);
  DivisionResult div = divide(f, gb.elements, gb.order);
  if (!div.remainder.is_zero()) return std::nullopt;
  std::vector<Polynomial> coeffs(I.gens().size(), Polynomial::zero(ring));
  for (size_t k = 0; k < gb.elements.size(); ++k) {
    if (div.quotients[k].is_zero()) continue;
    for (size_t j = 0; j < I.gens().size(); ++j) {
      const Polynomial& t = (*gb.transformation)[k][j];
      if (!t.is_zero()) coeffs[j] = coeffs[j] + div.quotients[k] * t;
    }
  }
  return coeffs;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const auto& a = I.groebner().elements;
  const auto& b = J.groebner().elements;
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> gens;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) {
      Polynomial p = a * b;
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  return Ideal(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (I.is_zero_ideal() || J.is_zero_ideal())
    return Ideal::zero(I.ring());
  if (I.is_unit_ideal()) return J;
  if (J.is_unit_ideal()) return I;
  // t*I + (1-t)*J, then eliminate the fresh t.
  RingExtension ext = extend_ring(I.ring(), {"@t"}, ExtendPosition::Front);
  Polynomial t = Polynomial::variable(ext.extended, 0);
  Polynomial one = Polynomial::constant(ext.extended, Scalar(1));
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens())
    if (!g.is_zero()) gens.push_back(t * embed(ext, g));
  for (const auto& g : J.gens())
    if (!g.is_zero()) gens.push_back((one - t) * embed(ext, g));
  MonomialOrder ord = MonomialOrder::block({0}, MonomialOrder::grevlex());
  GroebnerBasis gb = buchberger(gens, ord);
  std::vector<Polynomial> result;
  for (const auto& e : gb.elements) {
    bool has_t = false;
    for (const auto& term : e.terms())
      if (term.mono[0] != 0) {
        has_t = true;
        break;
      }
    if (!has_t) result.push_back(restrict(ext, e));
  }
  return Ideal(I.ring(), std::move(result));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& var_indices) {
  for (int v : var_indices)
    if (v < 0 || size_t(v) >= I.ring()->nvars())
      throw std::invalid_argument("variable index out of range");
  if (var_indices.empty()) return I;
  MonomialOrder ord =
      MonomialOrder::block(var_indices, MonomialOrder::grevlex());
  const GroebnerBasis& gb = I.groebner(ord);
  std::vector<Polynomial> result;
  for (const auto& e : gb.elements) {
    bool involved = false;
    for (const auto& term : e.terms()) {
      for (int v : var_indices)
        if (term.mono[size_t(v)] != 0) {
          involved = true;
          break;
        }
      if (involved) break;
    }
    if (!involved) result.push_back(e);
  }
  return Ideal(I.ring(), std::move(result));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  require_poly_ring(I, f);
  if (f.is_zero()) throw std::invalid_argument("colon by zero");
  if (I.is_zero_ideal()) return Ideal::zero(I.ring());
  if (f.is_constant() || I.is_unit_ideal()) return I;
  Ideal fI(I.ring(), {f});
  Ideal meet = intersect(I, fI);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.gens()) {
    if (g.is_zero()) continue;
    DivisionResult div = divide(g, {f}, I.ring()->default_order());
    if (!div.remainder.is_zero())
      throw std::logic_error("colon: generator not divisible by f");
    gens.push_back(div.quotients[0]);
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    if (g.is_zero()) continue;
    Ideal c = colon(I, g);
    acc = acc ? intersect(*acc, c) : std::move(c);
  }
  if (!acc) {
    // J = (0): I : (0) = (1)
    return Ideal(I.ring(),
                 {Polynomial::constant(I.ring(), Scalar(1))});
  }
  return *acc;
}

bool radical_member(const Ideal& I, const Polynomial& f) {
  require_poly_ring(I, f);
  if (f.is_zero()) return true;
  RingExtension ext = extend_ring(I.ring(), {"@y"}, ExtendPosition::Back);
  size_t y_index = ext.extended->nvars() - 1;
  Polynomial y = Polynomial::variable(ext.extended, y_index);
  Polynomial one = Polynomial::constant(ext.extended, Scalar(1));
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens())
    if (!g.is_zero()) gens.push_back(embed(ext, g));
  gens.push_back(one - y * embed(ext, f));
  GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
  return gb.is_unit();
}

int dimension(const Ideal& I) {
  const GroebnerBasis& gb = I.groebner();
  if (gb.is_unit()) return -1;
  size_t n = I.ring()->nvars();
  if (n > 25) throw std::invalid_argument("dimension: too many variables");
  std::vector<uint64_t> supports;
  for (const auto& e : gb.elements)
    supports.push_back(leading_term_under(e, gb.order).mono.support());
  int best = 0;
  for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
    bool independent = true;
    for (uint64_t lm : supports)
      if ((lm & ~s) == 0) {  // lm supported entirely inside s
        independent = false;
        break;
      }
    if (independent) best = std::max(best, __builtin_popcountll(s));
  }
  return best;
}

}  // namespace mmlab
