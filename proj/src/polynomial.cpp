#include "gtrace/polynomial.hpp"

#include <algorithm>

#include "gtrace/errors.hpp"

namespace gtrace {

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(v, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::renamed(const std::function<VarId(VarId)>& f) const {
  std::vector<Factor> out;
  out.reserve(factors_.size());
  for (const auto& [v, e] : factors_) out.emplace_back(f(v), e);
  return from_factors(std::move(out));
}

std::pair<Monomial, std::uint32_t> Monomial::split(VarId v) const {
  Monomial rest;
  std::uint32_t exp = 0;
  for (const auto& fac : factors_) {
    if (fac.first == v) {
      exp = fac.second;
    } else {
      rest.factors_.push_back(fac);
      rest.degree_ += fac.second;
    }
  }
  return {std::move(rest), exp};
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(const Integer& c) { return monomial(Monomial{}, c); }

Polynomial Polynomial::variable(VarId v) { return monomial(Monomial::variable(v)); }

Polynomial Polynomial::monomial(Monomial m, const Integer& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Integer Polynomial::constant_term() const { return coefficient(Monomial{}); }

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint64_t Polynomial::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [m1, c1] : p.terms_)
    for (const auto& [m2, c2] : q.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Polynomial operator*(const Integer& c, const Polynomial& p) {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [m, d] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * d);
  return out;
}

Polynomial operator-(const Polynomial& p) { return Integer(-1) * p; }

Polynomial Polynomial::renamed(const std::function<VarId(VarId)>& f) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m.renamed(f), c);
  return out;
}

std::string Polynomial::to_string(const std::function<std::string(VarId)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string body;
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += '*';
      body += name(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty())
      out += magnitude.str();
    else if (magnitude == 1)
      out += body;
    else
      out += magnitude.str() + "*" + body;
  }
  return out;
}

Polynomial expand_product(const std::vector<std::vector<Polynomial>>& factor_sums, std::uint64_t max_terms) {
  std::uint64_t projected = 1;
  for (const auto& sum : factor_sums) {
    std::uint64_t width = 0;
    for (const auto& p : sum) width += p.size();
    if (width == 0) return {};
    if (projected > max_terms / width)
      throw ResourceLimit("max_monomials", max_terms, "product expansion has too many terms before collection");
    projected *= width;
  }

  Polynomial result;
  // Depth-first over one summand term per list; prefix[k] is the product of the
  // terms chosen from lists 0..k-1.
  std::vector<std::pair<Monomial, Integer>> prefix(factor_sums.size() + 1);
  prefix[0] = {Monomial{}, Integer(1)};
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == factor_sums.size()) {
      result.add_term(prefix[k].first, prefix[k].second);
      return;
    }
    for (const auto& summand : factor_sums[k])
      for (const auto& [m, c] : summand.terms()) {
        prefix[k + 1] = {prefix[k].first * m, prefix[k].second * c};
        descend(k + 1);
      }
  };
  descend(0);
  return result;
}

}  // namespace gtrace
