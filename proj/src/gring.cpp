#include "gtrace/gring.hpp"

#include "gtrace/errors.hpp"

namespace gtrace {

GRing::GRing(GSetPtr variables, bool relation, Naming naming)
    : variables_(std::move(variables)), has_relation_(relation), naming_(naming) {
  if (has_relation_ && variables_->size() == 0)
    throw InputError("the relation sum(X) - 1 over an empty variable set gives the zero ring");
}

GRing GRing::polynomial_ring(GSetPtr variables) { return GRing(std::move(variables), false, Naming::Bracketed); }

GRing GRing::quotient_ring(GSetPtr variables) { return GRing(std::move(variables), true, Naming::Bracketed); }

GRing GRing::free_ring(const GroupPtr& g, std::uint32_t classes) {
  return GRing(free_gset(g, classes), false, Naming::Plain);
}

GRing GRing::integers(const GroupPtr& g) {
  return GRing(std::make_shared<TableGSet>(g, std::vector<std::string>{}, std::vector<Point>{}), false,
               Naming::Bracketed);
}

GRing GRing::regular_trace_ring(const GroupPtr& g) { return quotient_ring(regular_gset(g)); }

Polynomial GRing::var(Point x) const {
  if (x >= variables_->size()) throw InputError("variable index out of range");
  return Polynomial::variable(VarId{x});
}

Polynomial GRing::relation_generator() const {
  Polynomial out = Polynomial::constant(-1);
  for (Point x = 0; x < variables_->size(); ++x) out.add_term(Monomial::variable(VarId{x}), 1);
  return out;
}

Polynomial GRing::act(ElemIdx g, const Polynomial& p) const {
  if (g == Group::identity()) return p;
  return p.renamed([&](VarId v) { return VarId{variables_->act(g, v.point)}; });
}

Polynomial GRing::trace(const Subgroup& h, const Polynomial& p) const {
  if (h.parent() != group()) throw InputError("subgroup does not act on this ring");
  Polynomial out;
  for (auto a : h.elements()) out += act(a, p);
  return out;
}

Polynomial GRing::normal_form(const Polynomial& p, const Limits& limits) const {
  if (!has_relation_) return p;
  const VarId star = eliminated();

  // p = sum_k c_k * star^k; replace star by  1 - sum_{v != star} v
  std::map<std::uint32_t, Polynomial> by_power;
  for (const auto& [m, c] : p.terms()) {
    auto [rest, k] = m.split(star);
    by_power[k].add_term(rest, c);
  }

  Polynomial substitute = Polynomial::constant(1);
  for (Point x = 1; x < variables_->size(); ++x) substitute.add_term(Monomial::variable(VarId{x}), -1);

  Polynomial result;
  Polynomial power = Polynomial::constant(1);
  std::uint32_t current = 0;
  for (const auto& [k, coeff] : by_power) {
    while (current < k) {
      power *= substitute;
      ++current;
      if (power.size() > limits.max_monomials)
        throw ResourceLimit("max_monomials", limits.max_monomials, "normal form substitution too large");
    }
    result += coeff * power;
    if (result.size() > limits.max_monomials)
      throw ResourceLimit("max_monomials", limits.max_monomials, "normal form too large");
  }
  return result;
}

bool GRing::equal(const Polynomial& p, const Polynomial& q, const Limits& limits) const {
  return normal_form(p - q, limits).is_zero();
}

bool GRing::is_trace_one(const Subgroup& h, const Polynomial& x, const Limits& limits) const {
  return normal_form(trace(h, x) - Polynomial::constant(1), limits).is_zero();
}

std::string GRing::var_name(VarId v) const {
  auto label = variables_->label(v.point);
  return naming_ == Naming::Plain ? label : "y[" + label + "]";
}

std::string GRing::render(const Polynomial& p) const {
  return p.to_string([this](VarId v) { return var_name(v); });
}

Polynomial eval_hom(const Polynomial& p, const VarAssignment& a, const Limits& limits) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t projected = 1;
    for (const auto& [v, e] : m.factors()) {
      if (v.point >= a.images.size()) throw InputError("assignment does not cover every variable");
      const auto width = a.images[v.point].size();
      for (std::uint32_t k = 0; k < e; ++k) {
        if (width == 0) {
          projected = 0;
          break;
        }
        if (projected > limits.max_monomials / width)
          throw ResourceLimit("max_monomials", limits.max_monomials,
                              "image of a monomial has too many terms before collection");
        projected *= width;
      }
    }
    if (projected == 0) continue;
    Polynomial image = Polynomial::constant(c);
    for (const auto& [v, e] : m.factors())
      for (std::uint32_t k = 0; k < e; ++k) image *= a.images[v.point];
    out += image;
    if (out.size() > limits.max_monomials)
      throw ResourceLimit("max_monomials", limits.max_monomials, "image polynomial too large");
  }
  return out;
}

bool is_equivariant(const GRing& source, const VarAssignment& a, const GRing& target, const Subgroup& h,
                    const Limits& limits) {
  if (a.images.size() != source.variable_count()) return false;
  for (auto g : h.elements())
    for (Point v = 0; v < source.variable_count(); ++v) {
      const auto moved = source.variables()->act(g, v);
      if (!target.equal(a.images[moved], target.act(g, a.images[v]), limits)) return false;
    }
  return true;
}

}  // namespace gtrace
