#include "mmlab/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mmlab {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)), deg_(0) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    deg_ += e;
  }
}

Monomial Monomial::var(size_t nvars, size_t i, int e) {
  Monomial m(nvars);
  m.exps_[i] = e;
  m.deg_ = e;
  return m;
}

int Monomial::degree_in(const std::vector<int>& var_indices) const {
  int d = 0;
  for (int i : var_indices) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::mul(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += m.exps_[i];
  r.deg_ += m.deg_;
  return r;
}

Monomial Monomial::div(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= m.exps_[i];
    if (r.exps_[i] < 0) throw std::domain_error("monomial not divisible");
  }
  r.deg_ -= m.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
  Monomial r = *this;
  r.deg_ = 0;
  for (size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], m.exps_[i]);
    r.deg_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& m) const {
  Monomial r = *this;
  r.deg_ = 0;
  for (size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], m.exps_[i]);
    r.deg_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& m) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && m.exps_[i] > 0) return false;
  return true;
}

uint64_t Monomial::support() const {
  uint64_t s = 0;
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s |= (uint64_t(1) << i);
  return s;
}

MonomialOrder MonomialOrder::block(std::vector<int> front_vars,
                                   MonomialOrder inner) {
  MonomialOrder o(OrderKind::Block);
  std::sort(front_vars.begin(), front_vars.end());
  front_vars.erase(std::unique(front_vars.begin(), front_vars.end()),
                   front_vars.end());
  o.front_ = std::move(front_vars);
  o.inner_ = std::make_shared<MonomialOrder>(std::move(inner));
  return o;
}

// active empty means "all indices".
int MonomialOrder::compare_on(const Monomial& a, const Monomial& b,
                              const std::vector<int>& active) const {
  auto exp = [&](const Monomial& m, size_t k) {
    return active.empty() ? m[k] : m[active[k]];
  };
  size_t n = active.empty() ? a.size() : active.size();
  switch (kind_) {
    case OrderKind::Lex: {
      for (size_t k = 0; k < n; ++k) {
        int ea = exp(a, k), eb = exp(b, k);
        if (ea != eb) return ea > eb ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::GrevLex: {
      int da = 0, db = 0;
      for (size_t k = 0; k < n; ++k) {
        da += exp(a, k);
        db += exp(b, k);
      }
      if (da != db) return da > db ? 1 : -1;
      // Tie-break: smaller exponent in the last differing variable wins.
      for (size_t k = n; k-- > 0;) {
        int ea = exp(a, k), eb = exp(b, k);
        if (ea != eb) return ea < eb ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::Block: {
      int c = MonomialOrder::grevlex().compare_on(a, b, front_);
      if (c != 0) return c;
      std::vector<int> rest;
      size_t total = a.size();
      rest.reserve(total - front_.size());
      size_t fi = 0;
      for (size_t i = 0; i < total; ++i) {
        while (fi < front_.size() && size_t(front_[fi]) < i) ++fi;
        if (fi < front_.size() && size_t(front_[fi]) == i) continue;
        rest.push_back(int(i));
      }
      return inner_->compare_on(a, b, rest);
    }
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size())
    throw std::invalid_argument("monomial size mismatch");
  static const std::vector<int> all;
  return compare_on(a, b, all);
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Block: {
      std::ostringstream os;
      os << "block[";
      for (size_t i = 0; i < front_.size(); ++i)
        os << (i ? "," : "") << front_[i];
      os << "]:" << inner_->key();
      return os.str();
    }
  }
  return "?";
}

RingSpec::RingSpec(std::vector<std::string> vars, FieldSpec field,
                   MonomialOrder ord)
    : vars_(std::move(vars)), field_(field), order_(std::move(ord)) {}

RingPtr RingSpec::make(std::vector<std::string> vars, FieldSpec field,
                       MonomialOrder default_order) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name: " + v);
  }
  return RingPtr(
      new RingSpec(std::move(vars), field, std::move(default_order)));
}

std::optional<size_t> RingSpec::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

size_t RingSpec::var_index_checked(const std::string& name) const {
  auto i = var_index(name);
  if (!i) throw std::invalid_argument("unknown variable: " + name);
  return *i;
}

std::string RingSpec::to_string() const {
  std::ostringstream os;
  os << field_.to_string() << "[";
  for (size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
  os << "]";
  return os.str();
}

std::vector<int> RingExtension::new_indices() const {
  std::vector<int> idx;
  size_t off = position == ExtendPosition::Front ? 0 : base->nvars();
  for (size_t k = 0; k < added; ++k) idx.push_back(int(off + k));
  return idx;
}

Monomial RingExtension::embed(const Monomial& m) const {
  std::vector<int> e(extended->nvars(), 0);
  size_t off = position == ExtendPosition::Front ? added : 0;
  for (size_t i = 0; i < base->nvars(); ++i) e[off + i] = m[i];
  return Monomial(std::move(e));
}

Monomial RingExtension::restrict(const Monomial& m) const {
  size_t off = position == ExtendPosition::Front ? added : 0;
  for (int i : new_indices())
    if (m[size_t(i)] != 0)
      throw std::domain_error("monomial involves extension variable");
  std::vector<int> e(base->nvars(), 0);
  for (size_t i = 0; i < base->nvars(); ++i) e[i] = m[off + i];
  return Monomial(std::move(e));
}

RingExtension extend_ring(const RingPtr& ring,
                          const std::vector<std::string>& new_vars,
                          ExtendPosition pos) {
  for (const auto& v : new_vars)
    if (ring->var_index(v))
      throw std::invalid_argument("variable already exists: " + v);
  std::vector<std::string> vars;
  if (pos == ExtendPosition::Front) {
    vars = new_vars;
    vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
  } else {
    vars = ring->vars();
    vars.insert(vars.end(), new_vars.begin(), new_vars.end());
  }
  RingExtension ext;
  ext.base = ring;
  ext.extended =
      RingSpec::make(std::move(vars), ring->field(), ring->default_order());
  ext.position = pos;
  ext.added = new_vars.size();
  return ext;
}

}  // namespace mmlab
