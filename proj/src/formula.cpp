#include "gtrace/formula.hpp"

#include "gtrace/errors.hpp"
#include "gtrace/trace_tools.hpp"

namespace gtrace {

std::vector<std::size_t> Formula::indices() const {
  std::vector<std::size_t> out;
  for (const auto& c : classes) out.push_back(c.index());
  return out;
}

std::vector<ElemIdx> Formula::rep_set(std::size_t term, std::size_t cls) const {
  return factors[cls]->rep_set(terms[term].rep_sets[cls]);
}

Integer Formula::product_size() const {
  Integer out = 1;
  for (const auto& c : classes) out *= boost::multiprecision::pow(Integer(c.order()), static_cast<unsigned>(c.index()));
  return out;
}

Formula assemble_formula(const GroupPtr& g, std::vector<Subgroup> classes, const Limits& limits) {
  Formula f;
  f.group = g;
  std::vector<GSetPtr> factors;
  for (const auto& c : classes) {
    if (c.parent() != g) throw InputError("subgroup belongs to a different group");
    f.factors.push_back(rep_set_space(g, c, limits));
    factors.push_back(f.factors.back());
  }
  f.classes = std::move(classes);
  for (auto& rep : product_orbit_reps(factors, g, limits)) f.terms.push_back(FormulaTerm{std::move(rep.points)});
  return f;
}

Formula build_formula(const GroupPtr& g, const Limits& limits) {
  return assemble_formula(g, prime_order_subgroup_classes(g), limits);
}

GRing formula_ring(const Formula& f) {
  return GRing::free_ring(f.group, static_cast<std::uint32_t>(f.classes.size()));
}

Polynomial formula_as_polynomial(const Formula& f) {
  Polynomial out;
  for (std::size_t j = 0; j < f.s(); ++j) {
    std::vector<Monomial::Factor> factors;
    for (std::size_t i = 0; i < f.classes.size(); ++i)
      for (auto g : f.rep_set(j, i))
        factors.emplace_back(VarId{free_point(*f.group, static_cast<std::uint32_t>(i), g)}, 1);
    out.add_term(Monomial::from_factors(std::move(factors)), 1);
  }
  return out;
}

FreenessCheck verify_free(const Formula& f) {
  const auto& G = *f.group;
  std::vector<std::vector<ElemIdx>> choice(f.classes.size());
  std::vector<std::vector<std::uint32_t>> coset_of;
  for (const auto& c : f.classes) coset_of.push_back(left_coset_table(f.group, c));

  for (std::size_t j = 0; j < f.s(); ++j) {
    for (std::size_t i = 0; i < f.classes.size(); ++i) choice[i] = f.factors[i]->choices(f.terms[j].rep_sets[i]);
    for (ElemIdx g = 1; g < G.order(); ++g) {
      // g fixes the term iff it maps every chosen representative onto the choice of its new coset
      bool fixes = true;
      for (std::size_t i = 0; i < f.classes.size() && fixes; ++i)
        for (auto r : choice[i]) {
          const auto moved = G.mul(g, r);
          if (choice[i][coset_of[i][moved]] != moved) {
            fixes = false;
            break;
          }
        }
      if (fixes) return FreenessCheck{false, j, g};
    }
  }
  return {};
}

FreeActionCertificate verify_free_action(const GroupPtr& g, const std::vector<Subgroup>& classes) {
  FreeActionCertificate out;
  std::vector<std::vector<std::uint32_t>> coset_of;
  for (const auto& c : classes) coset_of.push_back(left_coset_table(g, c));
  for (ElemIdx x = 1; x < g->order(); ++x) {
    bool found = false;
    ElemIdx power = x;
    for (std::uint64_t k = 1; power != Group::identity() && !found; ++k, power = g->mul(power, x)) {
      for (std::size_t i = 0; i < classes.size() && !found; ++i)
        for (ElemIdx z = 0; z < g->order(); ++z)
          if (coset_of[i][g->mul(power, z)] == coset_of[i][z]) {
            out.witnesses.push_back(FreeActionCertificate::Witness{x, k, i, coset_of[i][z]});
            found = true;
            break;
          }
    }
    if (!found) {
      out.passed = false;
      out.fixing_element = x;
      return out;
    }
  }
  return out;
}

namespace {

std::string describe(const GRing& ring, const Monomial& m) {
  return ring.render(Polynomial::monomial(m));
}

}  // namespace

SymbolicCheck verify_symbolic(const Formula& f, const Limits& limits) {
  const auto& G = f.group;
  const GRing ring = formula_ring(f);
  SymbolicCheck out;
  out.x_size = f.product_size();
  out.s = f.s();
  if (out.x_size > limits.max_monomials)
    throw ResourceLimit("max_monomials", limits.max_monomials, "|X| = " + out.x_size.str() + " monomials");
  if (static_cast<std::uint64_t>(f.s()) * G->order() > limits.max_monomials)
    throw ResourceLimit("max_monomials", limits.max_monomials, "trace expansion too large");

  // tr_G(x_G): s * |G| translates, which must be pairwise distinct
  const Polynomial traced = ring.trace(Subgroup::whole(G), formula_as_polynomial(f));
  out.trace_terms = traced.size();
  out.trace_unique = true;
  for (const auto& [m, c] : traced.terms()) {
    if (c != 1) {
      out.trace_unique = false;
      out.discrepancy = "trace: monomial " + describe(ring, m) + " has multiplicity " + c.str();
      break;
    }
  }
  if (out.trace_unique && traced.size() != f.s() * G->order()) {
    out.trace_unique = false;
    out.discrepancy = "trace: " + std::to_string(traced.size()) + " distinct monomials, expected s*|G| = " +
                      std::to_string(f.s() * G->order());
  }

  // prod_i prod_{z in G/P_i} sum_{g in zP_i} g(x_{P_i})
  std::vector<std::vector<Polynomial>> sums;
  for (std::size_t i = 0; i < f.classes.size(); ++i) {
    const auto& p = f.classes[i];
    for (auto z : left_transversal(G, p)) {
      std::vector<Polynomial> coset;
      for (auto h : p.elements())
        coset.push_back(ring.var(free_point(*G, static_cast<std::uint32_t>(i), G->mul(z, h))));
      sums.push_back(std::move(coset));
    }
  }
  const Polynomial product = expand_product(sums, limits.max_monomials);
  out.a_size = product.size();

  out.product_matches = product == traced;
  if (!out.product_matches && out.discrepancy.empty()) {
    auto it = product.terms().begin();
    auto jt = traced.terms().begin();
    GradedOrder less;
    while (it != product.terms().end() || jt != traced.terms().end()) {
      if (jt == traced.terms().end() || (it != product.terms().end() && less(it->first, jt->first))) {
        out.discrepancy = "product: monomial " + describe(ring, it->first) + " missing from the trace";
        break;
      }
      if (it == product.terms().end() || less(jt->first, it->first)) {
        out.discrepancy = "trace: monomial " + describe(ring, jt->first) + " missing from the product";
        break;
      }
      if (it->second != jt->second) {
        out.discrepancy = "monomial " + describe(ring, it->first) + ": product coefficient " + it->second.str() +
                          ", trace coefficient " + jt->second.str();
        break;
      }
      ++it;
      ++jt;
    }
  }
  return out;
}

Polynomial evaluate_formula(const Formula& f, const GRing& ring, const std::vector<Polynomial>& witnesses,
                            const Limits& limits) {
  if (witnesses.size() != f.classes.size()) throw InputError("need one witness per class");
  if (ring.group() != f.group) throw InputError("ring is a G-ring for a different group");
  const auto& G = *f.group;
  VarAssignment a;
  a.images.resize(G.order() * f.classes.size());
  for (std::uint32_t i = 0; i < f.classes.size(); ++i)
    for (ElemIdx h = 0; h < G.order(); ++h) a.images[free_point(G, i, h)] = ring.act(h, witnesses[i]);
  return eval_hom(formula_as_polynomial(f), a, limits);
}

RingCheck verify_in_regular_ring(const GroupPtr& g, const Formula& f, const Limits& limits) {
  const GRing ring = GRing::regular_trace_ring(g);
  std::vector<Polynomial> witnesses;
  for (const auto& p : f.classes) witnesses.push_back(orbit_representative_sum(ring, p));
  const Polynomial x = evaluate_formula(f, ring, witnesses, limits);
  RingCheck out;
  out.residual = ring.normal_form(ring.trace(Subgroup::whole(g), x) - Polynomial::constant(1), limits);
  out.passed = out.residual.is_zero();
  return out;
}

bool covers_all_primes(const GroupPtr& g, const std::vector<Subgroup>& family) {
  std::vector<bool> covered(g->order(), false);
  for (const auto& n : family) {
    if (n.parent() != g) throw InputError("subgroup belongs to a different group");
    for (ElemIdx s = 0; s < g->order(); ++s)
      for (auto x : n.elements()) covered[g->conj(s, x)] = true;
  }
  for (ElemIdx x = 1; x < g->order(); ++x) {
    bool found = false;
    ElemIdx power = x;
    while (power != Group::identity() && !found) {
      found = covered[power];
      power = g->mul(power, x);
    }
    if (!found) return false;
  }
  return true;
}

GeneralizedFormula build_formula_generalized(const GroupPtr& g, std::vector<Subgroup> family, const Limits& limits) {
  if (!covers_all_primes(g, family))
    throw InputError("subgroup family does not meet every prime-order subgroup up to conjugacy");
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (are_conjugate(family[a], family[b]))
        throw InputError("family members " + family[a].format() + " and " + family[b].format() + " are conjugate");
  GeneralizedFormula out{assemble_formula(g, std::move(family), limits), {}};
  out.freeness = verify_free(out.formula);
  return out;
}

}  // namespace gtrace
