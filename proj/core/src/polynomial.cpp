#include "mmlab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mmlab {

namespace detail {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!f.ring() || !g.ring() || !f.ring()->same_ring(*g.ring()))
    throw std::invalid_argument("ring mismatch");
}

std::vector<Term> sort_terms(std::vector<Term> terms, const MonomialOrder& ord,
                             const FieldSpec& field) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  // Merge duplicates, drop zeros.
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Scalar c = field.reduce(t.coeff);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(Term{std::move(c), std::move(t.mono)});
    }
  }
  return out;
}

// Merge a + sign*c*m*b with both sides descending under ord.
static std::vector<Term> merge_mul(const std::vector<Term>& a,
                                   const Scalar& c, const Monomial& m,
                                   const std::vector<Term>& b, int sign,
                                   const MonomialOrder& ord,
                                   const FieldSpec& field) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].mono.mul(m);
    Scalar bc = field.mul(c, b[j].coeff);
    if (sign < 0) bc = field.neg(bc);
    if (i == a.size()) {
      if (bc != 0) out.push_back(Term{std::move(bc), std::move(bm)});
      ++j;
      continue;
    }
    int cmp = ord.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      if (bc != 0) out.push_back(Term{std::move(bc), std::move(bm)});
      ++j;
    } else {
      Scalar s = field.add(a[i].coeff, bc);
      if (s != 0) out.push_back(Term{std::move(s), std::move(bm)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> sub_mul(const std::vector<Term>& a, const Scalar& c,
                          const Monomial& m, const std::vector<Term>& b,
                          const MonomialOrder& ord, const FieldSpec& field) {
  return merge_mul(a, c, m, b, -1, ord, field);
}

}  // namespace detail

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  Scalar r = ring->field().reduce(c);
  if (r != 0) p.terms_.push_back(Term{r, Monomial::one(ring->nvars())});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t index, int exp) {
  if (index >= ring->nvars()) throw std::invalid_argument("variable index");
  Polynomial p(ring);
  if (exp < 0) throw std::invalid_argument("negative exponent");
  p.terms_.push_back(
      Term{ring->field().one(), Monomial::var(ring->nvars(), index, exp)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Scalar& c, Monomial m) {
  if (m.size() != ring->nvars()) throw std::invalid_argument("monomial size");
  Polynomial p(ring);
  Scalar r = ring->field().reduce(c);
  if (r != 0) p.terms_.push_back(Term{std::move(r), std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.size() != ring->nvars())
      throw std::invalid_argument("monomial size");
  Polynomial p(ring);
  p.terms_ = detail::sort_terms(std::move(terms), ring->default_order(),
                                ring->field());
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  detail::require_same_ring(*this, g);
  Polynomial r(ring_);
  r.terms_ = detail::merge_mul(terms_, ring_->field().one(),
                               Monomial::one(ring_->nvars()), g.terms_, +1,
                               ring_->default_order(), ring_->field());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  detail::require_same_ring(*this, g);
  Polynomial r(ring_);
  r.terms_ = detail::sub_mul(terms_, ring_->field().one(),
                             Monomial::one(ring_->nvars()), g.terms_,
                             ring_->default_order(), ring_->field());
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  detail::require_same_ring(*this, g);
  // Accumulate via an ordered map keyed by exponent vector, then sort once.
  std::map<std::vector<int>, Scalar> acc;
  const FieldSpec& field = ring_->field();
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      Monomial m = a.mono.mul(b.mono);
      Scalar c = field.mul(a.coeff, b.coeff);
      auto it = acc.find(m.exponents());
      if (it == acc.end())
        acc.emplace(m.exponents(), std::move(c));
      else
        it->second = field.add(it->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) terms.push_back(Term{std::move(c), Monomial(e)});
  return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::operator-() const { return scale(Scalar(-1)); }

Polynomial Polynomial::scale(const Scalar& c) const {
  Polynomial r(ring_);
  Scalar cr = ring_->field().reduce(c);
  if (cr == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{ring_->field().mul(t.coeff, cr), t.mono});
  return r;
}

Polynomial Polynomial::mono_mul(const Scalar& c, const Monomial& m) const {
  // Multiplying every term by one monomial preserves descending order.
  Polynomial r(ring_);
  Scalar cr = ring_->field().reduce(c);
  if (cr == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{ring_->field().mul(t.coeff, cr), t.mono.mul(m)});
  return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != ring_->nvars())
    throw std::invalid_argument("evaluation point size");
  const FieldSpec& field = ring_->field();
  Scalar total = field.zero();
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.mono[i]; ++k) v = field.mul(v, point[i]);
    }
    total = field.add(total, v);
  }
  return total;
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (!ring_ || !g.ring_) return terms_.empty() && g.terms_.empty();
  if (!ring_->same_ring(*g.ring_)) return false;
  if (terms_.size() != g.terms_.size()) return false;
  auto key_sorted = [](const std::vector<Term>& ts) {
    std::vector<const Term*> v;
    v.reserve(ts.size());
    for (const auto& t : ts) v.push_back(&t);
    std::sort(v.begin(), v.end(), [](const Term* a, const Term* b) {
      return a->mono.lex_key_less(b->mono);
    });
    return v;
  };
  auto a = key_sorted(terms_), b = key_sorted(g.terms_);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i]->mono != b[i]->mono || a[i]->coeff != b[i]->coeff) return false;
  return true;
}

const Term& leading_term_under(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw std::domain_error("zero polynomial has no leading term");
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms())
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

std::optional<Bidegree> multidegree(
    const Polynomial& f, const std::vector<std::vector<int>>& blocks) {
  for (const auto& block : blocks)
    for (int i : block)
      if (i < 0 || size_t(i) >= f.ring()->nvars())
        throw std::invalid_argument("unknown variable in block");
  if (f.is_zero()) return Bidegree(blocks.size(), 0);
  std::optional<Bidegree> shared;
  for (const auto& t : f.terms()) {
    Bidegree d(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b)
      d[b] = t.mono.degree_in(blocks[b]);
    if (!shared)
      shared = std::move(d);
    else if (*shared != d)
      return std::nullopt;
  }
  return shared;
}

Polynomial embed(const RingExtension& ext, const Polynomial& f) {
  if (!f.ring()->same_ring(*ext.base))
    throw std::invalid_argument("ring mismatch");
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms())
    terms.push_back(Term{t.coeff, ext.embed(t.mono)});
  return Polynomial::from_terms(ext.extended, std::move(terms));
}

Polynomial restrict(const RingExtension& ext, const Polynomial& f) {
  if (!f.ring()->same_ring(*ext.extended))
    throw std::invalid_argument("ring mismatch");
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms())
    terms.push_back(Term{t.coeff, ext.restrict(t.mono)});
  return Polynomial::from_terms(ext.base, std::move(terms));
}

}  // namespace mmlab
