#include "mmlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace mmlab {

namespace {

using Terms = std::vector<Term>;

struct Ctx {
  RingPtr ring;
  const MonomialOrder& ord;
  const FieldSpec& field;
};

Terms to_work(const Polynomial& f, const Ctx& cx) {
  return detail::sort_terms(f.terms(), cx.ord, cx.field);
}

Polynomial from_work(const Ctx& cx, Terms t) {
  return Polynomial::from_terms(cx.ring, std::move(t));
}

// h -= c*m*g starting at h[head:]; head terms are already irreducible.
Terms tail_sub_mul(const Terms& h, size_t head, const Scalar& c,
                   const Monomial& m, const Terms& g, const Ctx& cx) {
  Terms out(h.begin(), h.begin() + long(head));
  size_t i = head, j = 0;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial gm = g[j].mono.mul(m);
    Scalar gc = cx.field.neg(cx.field.mul(c, g[j].coeff));
    if (i == h.size()) {
      if (gc != 0) out.push_back(Term{std::move(gc), std::move(gm)});
      ++j;
      continue;
    }
    int cmp = cx.ord.compare(h[i].mono, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      if (gc != 0) out.push_back(Term{std::move(gc), std::move(gm)});
      ++j;
    } else {
      Scalar s = cx.field.add(h[i].coeff, gc);
      if (s != 0) out.push_back(Term{std::move(s), std::move(gm)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Divisor {
  const Terms* terms;
  Monomial lm;
  Scalar lc;
};

// Full normal form; optionally records quotient terms per divisor.
Terms reduce_full(Terms h, const std::vector<Divisor>& divisors, const Ctx& cx,
                  std::vector<Terms>* quotients) {
  size_t head = 0;  // h[0:head) is the irreducible prefix
  while (head < h.size()) {
    const Term& lt = h[head];
    size_t pick = divisors.size();
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].lm.divides(lt.mono)) {
        pick = i;
        break;
      }
    }
    if (pick == divisors.size()) {
      ++head;
      continue;
    }
    Scalar q = cx.field.div(lt.coeff, divisors[pick].lc);
    Monomial m = lt.mono.div(divisors[pick].lm);
    if (quotients) (*quotients)[pick].push_back(Term{q, m});
    h = tail_sub_mul(h, head, q, m, *divisors[pick].terms, cx);
  }
  return h;
}

std::vector<Divisor> make_divisors(const std::vector<Terms>& basis) {
  std::vector<Divisor> d;
  d.reserve(basis.size());
  for (const auto& b : basis)
    d.push_back(Divisor{&b, b.front().mono, b.front().coeff});
  return d;
}

Terms spoly_work(const Terms& f, const Terms& g, const Ctx& cx) {
  const Monomial& lmf = f.front().mono;
  const Monomial& lmg = g.front().mono;
  Monomial l = lmf.lcm(lmg);
  // (l/lt f)*f - (l/lt g)*g
  Terms left;
  left.reserve(f.size());
  Scalar cf = cx.field.inv(f.front().coeff);
  Monomial mf = l.div(lmf);
  for (const auto& t : f)
    left.push_back(Term{cx.field.mul(cf, t.coeff), t.mono.mul(mf)});
  Scalar cg = cx.field.inv(g.front().coeff);
  Monomial mg = l.div(lmg);
  return tail_sub_mul(left, 0, cg, mg, g, cx);
}

uint64_t pair_key(uint32_t i, uint32_t j) {
  return (uint64_t(i) << 32) | j;
}

// Work-side Buchberger state; transformation rows are carried only when
// tracking is on.
struct Element {
  Terms t;
  std::vector<Terms> row;
};

struct PendingPair {
  Monomial lcm;
  uint32_t i, j;
  uint64_t seq;
};

struct BasisBuilder {
  const Ctx& cx;
  bool track;
  PairStrategy strategy;
  size_t ngens;
  std::vector<Element> els;
  std::vector<PendingPair> queue;
  std::unordered_set<uint64_t> pending;
  uint64_t seq = 0;

  BasisBuilder(const Ctx& cx, const BuchbergerOptions& opts, size_t ngens)
      : cx(cx), track(opts.track), strategy(opts.strategy), ngens(ngens) {}

  void make_monic(Element& e) {
    Scalar lc = e.t.front().coeff;
    if (lc == cx.field.one()) return;
    Scalar inv = cx.field.inv(lc);
    for (auto& t : e.t) t.coeff = cx.field.mul(t.coeff, inv);
    if (track)
      for (auto& r : e.row)
        for (auto& t : r) t.coeff = cx.field.mul(t.coeff, inv);
  }

  // Reduce candidate fully against the current basis, updating its row.
  void reduce_candidate(Element& e) {
    if (els.empty()) return;
    std::vector<Divisor> divisors;
    divisors.reserve(els.size());
    for (const auto& el : els)
      divisors.push_back(
          Divisor{&el.t, el.t.front().mono, el.t.front().coeff});
    std::vector<Terms> quotients(divisors.size());
    e.t = reduce_full(std::move(e.t), divisors, cx,
                      track ? &quotients : nullptr);
    if (track) {
      for (size_t k = 0; k < quotients.size(); ++k) {
        for (const auto& q : quotients[k]) {
          for (size_t j = 0; j < ngens; ++j) {
            if (els[k].row[j].empty()) continue;
            e.row[j] = tail_sub_mul(e.row[j], 0, q.coeff, q.mono,
                                    els[k].row[j], cx);
          }
        }
      }
    }
  }

  void insert(Element e) {
    make_monic(e);
    uint32_t n = uint32_t(els.size());
    const Monomial& lm = e.t.front().mono;
    for (uint32_t k = 0; k < n; ++k) {
      PendingPair p{lm.lcm(els[k].t.front().mono), k, n, seq++};
      pending.insert(pair_key(k, n));
      queue.push_back(std::move(p));
    }
    els.push_back(std::move(e));
  }

  // Deterministic selection per strategy; returns index into queue.
  size_t select() const {
    size_t best = 0;
    for (size_t k = 1; k < queue.size(); ++k) {
      const PendingPair &a = queue[k], &b = queue[best];
      bool better;
      if (strategy == PairStrategy::MinDegree) {
        if (a.lcm.degree() != b.lcm.degree())
          better = a.lcm.degree() < b.lcm.degree();
        else {
          int c = cx.ord.compare(a.lcm, b.lcm);
          better = c != 0 ? c < 0 : a.seq < b.seq;
        }
      } else {
        better = a.seq < b.seq;
      }
      if (better) best = k;
    }
    return best;
  }

  bool chain_criterion(const PendingPair& p) const {
    for (uint32_t k = 0; k < els.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const Monomial& lmk = els[k].t.front().mono;
      if (!lmk.divides(p.lcm)) continue;
      uint32_t a1 = std::min(p.i, k), b1 = std::max(p.i, k);
      uint32_t a2 = std::min(p.j, k), b2 = std::max(p.j, k);
      if (pending.count(pair_key(a1, b1)) || pending.count(pair_key(a2, b2)))
        continue;
      if (els[p.i].t.front().mono.lcm(lmk) == p.lcm) continue;
      if (els[p.j].t.front().mono.lcm(lmk) == p.lcm) continue;
      return true;
    }
    return false;
  }

  void run() {
    while (!queue.empty()) {
      size_t idx = select();
      PendingPair p = std::move(queue[idx]);
      queue.erase(queue.begin() + long(idx));
      pending.erase(pair_key(p.i, p.j));
      const Monomial& lmi = els[p.i].t.front().mono;
      const Monomial& lmj = els[p.j].t.front().mono;
      if (lmi.coprime(lmj)) continue;  // product criterion
      if (chain_criterion(p)) continue;
      Element cand;
      cand.t = spoly_work(els[p.i].t, els[p.j].t, cx);
      if (track) {
        cand.row.resize(ngens);
        Monomial l = lmi.lcm(lmj);
        Scalar ci = cx.field.inv(els[p.i].t.front().coeff);
        Monomial mi = l.div(lmi);
        Scalar cj = cx.field.inv(els[p.j].t.front().coeff);
        Monomial mj = l.div(lmj);
        for (size_t g = 0; g < ngens; ++g) {
          Terms r;
          for (const auto& t : els[p.i].row[g])
            r.push_back(Term{cx.field.mul(ci, t.coeff), t.mono.mul(mi)});
          if (!els[p.j].row[g].empty())
            r = tail_sub_mul(r, 0, cj, mj, els[p.j].row[g], cx);
          cand.row[g] = std::move(r);
        }
      }
      if (cand.t.empty()) continue;
      reduce_candidate(cand);
      if (!cand.t.empty()) insert(std::move(cand));
    }
  }
};

// Minimalize + tail-reduce + sort; shared by buchberger() and reduce_basis().
void reduce_in_place(std::vector<Element>& els, const Ctx& cx, bool track) {
  // Drop elements whose leading monomial is divisible by another's.
  for (size_t i = 0; i < els.size();) {
    bool drop = false;
    for (size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      const Monomial& lmj = els[j].t.front().mono;
      const Monomial& lmi = els[i].t.front().mono;
      if (lmj.divides(lmi) && (lmi != lmj || j < i)) {
        drop = true;
        break;
      }
    }
    if (drop)
      els.erase(els.begin() + long(i));
    else
      ++i;
  }
  // Tail-reduce every element against all others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < els.size(); ++i) {
      std::vector<Divisor> divisors;
      std::vector<size_t> map;
      for (size_t j = 0; j < els.size(); ++j)
        if (j != i) {
          divisors.push_back(Divisor{&els[j].t, els[j].t.front().mono,
                                     els[j].t.front().coeff});
          map.push_back(j);
        }
      if (divisors.empty()) break;
      std::vector<Terms> quotients(divisors.size());
      Terms reduced = reduce_full(els[i].t, divisors, cx,
                                  track ? &quotients : nullptr);
      if (reduced != els[i].t) {
        changed = true;
        els[i].t = std::move(reduced);
        if (track) {
          for (size_t k = 0; k < quotients.size(); ++k)
            for (const auto& q : quotients[k])
              for (size_t g = 0; g < els[i].row.size(); ++g) {
                if (els[map[k]].row[g].empty()) continue;
                els[i].row[g] = tail_sub_mul(els[i].row[g], 0, q.coeff,
                                             q.mono, els[map[k]].row[g], cx);
              }
        }
        if (els[i].t.empty()) {
          els.erase(els.begin() + long(i));
          break;  // restart scan
        }
      }
    }
  }
  std::sort(els.begin(), els.end(), [&](const Element& a, const Element& b) {
    return cx.ord.compare(a.t.front().mono, b.t.front().mono) < 0;
  });
}

GroebnerBasis finalize(std::vector<Element> els, const Ctx& cx, bool track,
                       const MonomialOrder& ord) {
  GroebnerBasis gb;
  gb.order = ord;
  for (auto& e : els) gb.elements.push_back(from_work(cx, std::move(e.t)));
  if (track) {
    std::vector<std::vector<Polynomial>> tr;
    for (auto& e : els) {
      std::vector<Polynomial> row;
      for (auto& r : e.row) row.push_back(from_work(cx, std::move(r)));
      tr.push_back(std::move(row));
    }
    gb.transformation = std::move(tr);
  }
  return gb;
}

RingPtr common_ring(const std::vector<Polynomial>& polys) {
  RingPtr ring;
  for (const auto& p : polys) {
    if (!p.ring()) throw std::invalid_argument("uninitialized polynomial");
    if (!ring)
      ring = p.ring();
    else if (!ring->same_ring(*p.ring()))
      throw std::invalid_argument("ring mismatch");
  }
  return ring;
}

}  // namespace

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord) {
  if (divisors.empty()) return DivisionResult{{}, f};
  for (const auto& g : divisors) {
    detail::require_same_ring(f, g);
    if (g.is_zero()) throw std::invalid_argument("zero divisor");
  }
  Ctx cx{f.ring(), ord, f.ring()->field()};
  std::vector<Terms> basis;
  basis.reserve(divisors.size());
  for (const auto& g : divisors) basis.push_back(to_work(g, cx));
  auto divs = make_divisors(basis);
  std::vector<Terms> quotients(divisors.size());
  Terms r = reduce_full(to_work(f, cx), divs, cx, &quotients);
  DivisionResult res;
  res.remainder = from_work(cx, std::move(r));
  for (auto& q : quotients)
    res.quotients.push_back(from_work(cx, std::move(q)));
  return res;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord) {
  detail::require_same_ring(f, g);
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of zero");
  Ctx cx{f.ring(), ord, f.ring()->field()};
  return from_work(cx, spoly_work(to_work(f, cx), to_work(g, cx), cx));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord,
                         const BuchbergerOptions& opts) {
  RingPtr ring = common_ring(gens);
  if (!ring) {
    // No generators at all: treat as the zero ideal in an unknown ring.
    GroebnerBasis gb;
    gb.order = ord;
    if (opts.track) gb.transformation.emplace();
    return gb;
  }
  Ctx cx{ring, ord, ring->field()};
  BasisBuilder builder(cx, opts, gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    Element e;
    e.t = to_work(gens[i], cx);
    if (opts.track) {
      e.row.resize(gens.size());
      e.row[i].push_back(
          Term{cx.field.one(), Monomial::one(ring->nvars())});
    }
    builder.reduce_candidate(e);
    if (!e.t.empty()) builder.insert(std::move(e));
  }
  builder.run();
  reduce_in_place(builder.els, cx, opts.track);
  return finalize(std::move(builder.els), cx, opts.track, ord);
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
  if (gb.elements.empty()) return gb;
  RingPtr ring = common_ring(gb.elements);
  Ctx cx{ring, gb.order, ring->field()};
  bool track = gb.transformation.has_value();
  std::vector<Element> els;
  for (size_t i = 0; i < gb.elements.size(); ++i) {
    Element e;
    e.t = to_work(gb.elements[i], cx);
    if (e.t.empty()) continue;
    if (track) {
      for (const auto& p : (*gb.transformation)[i])
        e.row.push_back(to_work(p, cx));
    }
    // make monic
    Scalar inv = cx.field.inv(e.t.front().coeff);
    if (inv != cx.field.one()) {
      for (auto& t : e.t) t.coeff = cx.field.mul(t.coeff, inv);
      for (auto& r : e.row)
        for (auto& t : r) t.coeff = cx.field.mul(t.coeff, inv);
    }
    els.push_back(std::move(e));
  }
  reduce_in_place(els, cx, track);
  return finalize(std::move(els), cx, track, gb.order);
}

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
  if (basis.empty()) return f;
  for (const auto& g : basis) detail::require_same_ring(f, g);
  Ctx cx{f.ring(), ord, f.ring()->field()};
  std::vector<Terms> work;
  for (const auto& g : basis)
    if (!g.is_zero()) work.push_back(to_work(g, cx));
  if (work.empty()) return f;
  auto divisors = make_divisors(work);
  return from_work(cx, reduce_full(to_work(f, cx), divisors, cx, nullptr));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.elements, gb.order);
}

}  // namespace mmlab
