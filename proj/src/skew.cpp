#include "gtrace/skew.hpp"

#include "gtrace/errors.hpp"
#include "gtrace/formula.hpp"
#include "gtrace/trace_tools.hpp"

namespace gtrace {

SkewElement SkewElement::basis(ElemIdx sigma, const Polynomial& a) {
  SkewElement x;
  x.add_term(sigma, a);
  return x;
}

Polynomial SkewElement::coefficient(ElemIdx sigma) const {
  auto it = coeffs_.find(sigma);
  return it == coeffs_.end() ? Polynomial{} : it->second;
}

void SkewElement::add_term(ElemIdx sigma, const Polynomial& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(sigma, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SkewElement& SkewElement::operator+=(const SkewElement& y) {
  for (const auto& [sigma, a] : y.coeffs_) add_term(sigma, a);
  return *this;
}

SkewElement SkewRing::sum_of_units() const {
  SkewElement x;
  for (ElemIdx sigma = 0; sigma < group()->order(); ++sigma) x.add_term(sigma, Polynomial::constant(1));
  return x;
}

SkewElement SkewRing::mul(const SkewElement& x, const SkewElement& y) const {
  SkewElement out;
  for (const auto& [sigma, a] : x.coefficients())
    for (const auto& [tau, b] : y.coefficients()) out.add_term(group()->mul(sigma, tau), a * base_.act(sigma, b));
  return out;
}

Polynomial SkewRing::module_act(const SkewElement& x, const Polynomial& b) const {
  Polynomial out;
  for (const auto& [sigma, a] : x.coefficients()) out += a * base_.act(sigma, b);
  return out;
}

bool SkewRing::equal(const SkewElement& x, const SkewElement& y, const Limits& limits) const {
  SkewElement diff = x;
  for (const auto& [sigma, b] : y.coefficients()) diff.add_term(sigma, -b);
  for (const auto& [sigma, a] : diff.coefficients())
    if (!base_.normal_form(a, limits).is_zero()) return false;
  return true;
}

std::string SkewRing::render(const SkewElement& x) const {
  if (x.coefficients().empty()) return "0";
  std::string out;
  for (const auto& [sigma, a] : x.coefficients()) {
    if (!out.empty()) out += " + ";
    out += "(" + base_.render(a) + ")·u[" + group()->format(sigma) + "]";
  }
  return out;
}

Splitting::Splitting(SkewRing ring, Polynomial x_g, const Limits& limits)
    : ring_(std::move(ring)), x_g_(std::move(x_g)) {
  if (!ring_.base().is_trace_one(Subgroup::whole(ring_.group()), x_g_, limits))
    throw InputError("splitting needs an element with tr_G = 1");
}

SkewElement Splitting::section(const Polynomial& b) const {
  SkewElement out;
  for (ElemIdx sigma = 0; sigma < ring_.group()->order(); ++sigma)
    out.add_term(sigma, b * ring_.base().act(sigma, x_g_));
  return out;
}

Polynomial SkewSampler::polynomial(std::size_t terms, std::uint32_t max_degree) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::uint32_t> degree(0, max_degree);
  Polynomial p;
  const auto n = static_cast<Point>(ring_.variable_count());
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> factors;
    const auto d = n == 0 ? 0 : degree(rng_);
    for (std::uint32_t k = 0; k < d; ++k)
      factors.emplace_back(VarId{std::uniform_int_distribution<Point>(0, n - 1)(rng_)}, 1);
    p.add_term(Monomial::from_factors(std::move(factors)), coef(rng_));
  }
  return p;
}

SkewElement SkewSampler::element(std::size_t terms) {
  std::uniform_int_distribution<ElemIdx> pick(0, static_cast<ElemIdx>(ring_.group()->order() - 1));
  SkewElement x;
  for (std::size_t t = 0; t < terms; ++t) x.add_term(pick(rng_), polynomial());
  return x;
}

SplittingReport verify_splitting(const Splitting& s, std::size_t samples, std::uint64_t seed, const Limits& limits) {
  const auto& ring = s.ring();
  SkewSampler sampler(ring.base(), seed);
  SplittingReport out{samples, true, true};
  for (std::size_t k = 0; k < samples; ++k) {
    const Polynomial b = sampler.polynomial();
    const SkewElement w = sampler.element();
    if (!ring.base().equal(ring.augmentation(s.section(b)), b, limits)) out.retraction = false;
    if (!ring.equal(s.section(ring.module_act(w, b)), ring.mul(w, s.section(b)), limits)) out.linearity = false;
  }
  return out;
}

SkewAxiomReport verify_skew_axioms(const SkewRing& ring, std::size_t samples, std::uint64_t seed, const Limits& limits) {
  const auto& k = ring.base();
  SkewAxiomReport out{0, true, samples, true, true};
  std::vector<Polynomial> span{Polynomial::constant(1)};
  const auto n = static_cast<Point>(k.variable_count());
  for (Point x = 0; x < n; ++x) span.push_back(k.var(x));
  for (Point x = 0; x < n; ++x)
    for (Point y = x; y < n; ++y) span.push_back(k.var(x) * k.var(y));
  const auto units = ring.sum_of_units();
  const auto whole = Subgroup::whole(ring.group());
  for (const auto& b : span) {
    ++out.bridge_checked;
    if (!k.equal(ring.module_act(units, b), k.trace(whole, b), limits)) out.bridge = false;
  }
  SkewSampler sampler(k, seed ^ 0xa550c);
  for (std::size_t t = 0; t < samples; ++t) {
    const auto x = sampler.element(), y = sampler.element(), z = sampler.element();
    const auto b = sampler.polynomial();
    if (!ring.equal(ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z)), limits)) out.associativity = false;
    if (!k.equal(ring.module_act(ring.mul(x, y), b), ring.module_act(x, ring.module_act(y, b)), limits))
      out.module_action = false;
  }
  return out;
}

Polynomial regular_trace_element(const GroupPtr& g, const Limits& limits) {
  const auto f = build_formula(g, limits);
  const auto ring = GRing::regular_trace_ring(g);
  std::vector<Polynomial> witnesses;
  for (const auto& p : f.classes) witnesses.push_back(orbit_representative_sum(ring, p));
  return ring.normal_form(evaluate_formula(f, ring, witnesses, limits), limits);
}

}  // namespace gtrace
