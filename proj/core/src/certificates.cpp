#include "mmlab/certificates.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace mmlab {

std::string Restriction::describe() const {
  if (!subring_vars && !blocks) return "fullring";
  std::ostringstream os;
  if (subring_vars) {
    os << "subring[";
    for (size_t i = 0; i < subring_vars->size(); ++i)
      os << (i ? "," : "") << (*subring_vars)[i];
    os << "]";
  }
  if (blocks) os << (subring_vars ? "+" : "") << "bihom";
  return os.str();
}

std::vector<Monomial> monomial_basis(const RingPtr& ring,
                                     const std::vector<int>& vars,
                                     int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("negative degree bound");
  for (int v : vars)
    if (v < 0 || size_t(v) >= ring->nvars())
      throw std::invalid_argument("variable index out of range");
  std::vector<Monomial> out;
  std::vector<int> exps(ring->nvars(), 0);
  // Enumerate degree by degree, lexicographically within a degree.
  std::function<void(size_t, int)> rec = [&](size_t k, int remaining) {
    if (k == vars.size()) {
      if (remaining == 0) out.push_back(Monomial(exps));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[size_t(vars[k])] = e;
      rec(k + 1, remaining - e);
    }
    exps[size_t(vars[k])] = 0;
  };
  for (int d = 0; d <= max_deg; ++d) rec(0, d);
  return out;
}

void LinearSystem::pin(size_t col, const Scalar& value) {
  rows.push_back({{int(col), Scalar(1)}});
  rhs.push_back(value);
  row_monomials.push_back(Monomial::one(ring->nvars()));
}

bool LinearSystem::pin_coefficient(int gen, const Polynomial& value) {
  std::map<std::vector<int>, Scalar> wanted;
  for (const auto& t : value.terms()) wanted[t.mono.exponents()] = t.coeff;
  for (size_t col = 0; col < unknowns.size(); ++col) {
    if (unknowns[col].first != gen) continue;
    auto it = wanted.find(unknowns[col].second.exponents());
    if (it == wanted.end()) {
      pin(col, Scalar(0));
    } else {
      pin(col, it->second);
      wanted.erase(it);
    }
  }
  return wanted.empty();  // leftover monomials have no slot
}

LinearSystem build_system(const CertificateQuery& query) {
  const RingPtr& ring = query.target.ring();
  for (const auto& g : query.generators)
    detail::require_same_ring(query.target, g);
  std::vector<int> all_vars;
  for (size_t i = 0; i < ring->nvars(); ++i) all_vars.push_back(int(i));
  const std::vector<int>& vars =
      query.restriction.subring_vars ? *query.restriction.subring_vars
                                     : all_vars;
  std::optional<Bidegree> target_bd;
  if (query.restriction.blocks) {
    target_bd = multidegree(query.target, *query.restriction.blocks);
    if (!target_bd)
      throw std::invalid_argument(
          "target not block-homogeneous under restriction");
  }
  std::vector<Monomial> basis = monomial_basis(ring, vars, query.degree_bound);

  LinearSystem sys;
  sys.ring = ring;
  std::map<std::vector<int>, size_t> row_index;
  auto row_of = [&](const Monomial& m) {
    auto [it, inserted] = row_index.emplace(m.exponents(), sys.rows.size());
    if (inserted) {
      sys.rows.emplace_back();
      sys.rhs.push_back(Scalar(0));
      sys.row_monomials.push_back(m);
    }
    return it->second;
  };

  const FieldSpec& field = ring->field();
  for (size_t gi = 0; gi < query.generators.size(); ++gi) {
    const Polynomial& g = query.generators[gi];
    if (g.is_zero()) continue;
    std::optional<Bidegree> gen_bd;
    if (query.restriction.blocks) {
      gen_bd = multidegree(g, *query.restriction.blocks);
      if (!gen_bd) continue;  // no coefficient can restore homogeneity
      bool possible = true;
      for (size_t b = 0; b < gen_bd->size(); ++b)
        if ((*gen_bd)[b] > (*target_bd)[b]) possible = false;
      if (!possible) continue;
    }
    for (const auto& m : basis) {
      if (gen_bd) {
        bool ok = true;
        for (size_t b = 0; b < query.restriction.blocks->size(); ++b) {
          int need = (*target_bd)[b] - (*gen_bd)[b];
          if (m.degree_in((*query.restriction.blocks)[b]) != need) ok = false;
        }
        if (!ok) continue;
      }
      size_t col = sys.unknowns.size();
      sys.unknowns.emplace_back(int(gi), m);
      for (const auto& t : g.terms()) {
        size_t r = row_of(m.mul(t.mono));
        auto [it, inserted] = sys.rows[r].emplace(int(col), t.coeff);
        if (!inserted) it->second = field.add(it->second, t.coeff);
      }
    }
  }
  for (const auto& t : query.target.terms()) sys.rhs[row_of(t.mono)] = t.coeff;
  return sys;
}

std::optional<std::vector<Scalar>> solve_exact(const LinearSystem& sys,
                                               const FieldSpec& field) {
  size_t nrows = sys.rows.size();
  size_t ncols = sys.unknowns.size();
  std::vector<std::map<int, Scalar>> rows = sys.rows;
  std::vector<Scalar> rhs = sys.rhs;
  std::vector<bool> active(nrows, true);
  std::vector<int> col_count(ncols, 0);
  for (size_t r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) {
      (void)v;
      ++col_count[size_t(c)];
    }

  // Rows indexed by current size so the shortest is always at hand, and
  // columns indexed by the active rows containing them.
  std::set<std::pair<size_t, size_t>> by_size;
  std::vector<std::set<size_t>> col_rows(ncols);
  for (size_t r = 0; r < nrows; ++r) {
    by_size.insert({rows[r].size(), r});
    for (const auto& [c, v] : rows[r]) {
      (void)v;
      col_rows[size_t(c)].insert(r);
    }
  }

  // (row, pivot column) in elimination order, for back-substitution.
  std::vector<std::pair<size_t, int>> pivots;
  while (!by_size.empty()) {
    // Shortest active row first; empty rows decide feasibility immediately.
    auto [sz, best] = *by_size.begin();
    by_size.erase(by_size.begin());
    active[best] = false;
    if (sz == 0) {
      if (rhs[best] != 0) return std::nullopt;
      continue;
    }
    // Pivot on this row's rarest column.
    int pc = -1;
    for (const auto& [c, v] : rows[best]) {
      (void)v;
      if (pc < 0 || col_count[size_t(c)] < col_count[size_t(pc)]) pc = c;
    }
    Scalar pval = rows[best].at(pc);
    for (const auto& [c, v] : rows[best]) {
      (void)v;
      col_rows[size_t(c)].erase(best);
      --col_count[size_t(c)];
    }
    std::vector<size_t> touched(col_rows[size_t(pc)].begin(),
                                col_rows[size_t(pc)].end());
    for (size_t r : touched) {
      if (!active[r]) continue;
      auto it = rows[r].find(pc);
      if (it == rows[r].end()) continue;
      by_size.erase({rows[r].size(), r});
      Scalar factor = field.div(it->second, pval);
      for (const auto& [c, v] : rows[best]) {
        if (c == pc) continue;
        auto [jt, inserted] = rows[r].emplace(c, field.zero());
        jt->second = field.sub(jt->second, field.mul(factor, v));
        if (jt->second == 0) {
          rows[r].erase(jt);
          --col_count[size_t(c)];
          col_rows[size_t(c)].erase(r);
        } else if (inserted) {
          ++col_count[size_t(c)];
          col_rows[size_t(c)].insert(r);
        }
      }
      rows[r].erase(it);
      --col_count[size_t(pc)];
      col_rows[size_t(pc)].erase(r);
      rhs[r] = field.sub(rhs[r], field.mul(factor, rhs[best]));
      by_size.insert({rows[r].size(), r});
    }
    pivots.emplace_back(best, pc);
  }

  std::vector<Scalar> values(ncols, field.zero());
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, pc] = *it;
    Scalar acc = rhs[r];
    for (const auto& [c, v] : rows[r])
      if (c != pc) acc = field.sub(acc, field.mul(v, values[size_t(c)]));
    values[size_t(pc)] = field.div(acc, rows[r].at(pc));
  }
  return values;
}

Certificate extract_certificate(const LinearSystem& sys,
                                const CertificateQuery& query,
                                const std::vector<Scalar>& values) {
  const RingPtr& ring = query.target.ring();
  std::vector<std::vector<Term>> coeff_terms(query.generators.size());
  for (size_t col = 0; col < sys.unknowns.size(); ++col) {
    if (values[col] == 0) continue;
    auto [gen, mono] = sys.unknowns[col];
    coeff_terms[size_t(gen)].push_back(Term{values[col], mono});
  }
  Certificate cert;
  cert.max_degree = 0;
  Polynomial expansion = Polynomial::zero(ring);
  for (size_t gi = 0; gi < query.generators.size(); ++gi) {
    Polynomial c = Polynomial::from_terms(ring, std::move(coeff_terms[gi]));
    if (!c.is_zero()) {
      cert.max_degree = std::max(cert.max_degree, c.total_degree());
      expansion = expansion + c * query.generators[gi];
    }
    cert.coefficients.push_back(std::move(c));
  }
  if (expansion != query.target)
    throw std::logic_error("certificate re-expansion mismatch");
  return cert;
}

std::optional<std::pair<int, Certificate>> min_certificate_degree(
    const Polynomial& target, const std::vector<Polynomial>& generators,
    int d_max, const Restriction& restriction) {
  if (d_max < 0) throw std::invalid_argument("negative degree cap");
  for (int d = 0; d <= d_max; ++d) {
    CertificateQuery q{target, generators, d, restriction};
    LinearSystem sys = build_system(q);
    auto sol = solve_exact(sys, target.ring()->field());
    if (sol) return std::make_pair(d, extract_certificate(sys, q, *sol));
  }
  return std::nullopt;
}

}  // namespace mmlab
