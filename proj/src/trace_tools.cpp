#include "gtrace/trace_tools.hpp"

#include "gtrace/errors.hpp"

namespace gtrace {

Polynomial orbit_representative_sum(const GRing& ring, const Subgroup& p) {
  Polynomial out;
  for (const auto& orbit : orbit_decompose(*ring.variables(), p).orbits) {
    if (!orbit.stabilizer.is_trivial())
      throw InputError(p.format() + " fixes variable " + ring.var_name(VarId{orbit.representative}));
    out += ring.var(orbit.representative);
  }
  return out;
}

Polynomial restrict_to_subgroup(const GRing& ring, const Polynomial& x, const Subgroup& h) {
  Polynomial out;
  for (auto g : right_transversal(ring.group(), h)) out += ring.act(g, x);
  return out;
}

Polynomial conjugate_solution(const GRing& ring, ElemIdx g, const Polynomial& x) { return ring.act(g, x); }

namespace {

// g = a*x + b*y
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Integer x1, y1;
  Integer g = extended_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

SylowCombination sylow_combine(const GRing& ring, const std::map<std::uint64_t, SylowWitness>& witnesses,
                               const Limits& limits) {
  const auto& G = ring.group();
  SylowCombination out;
  for (auto p : prime_divisors(G->order())) {
    auto it = witnesses.find(p);
    if (it == witnesses.end()) throw InputError("no witness for prime " + std::to_string(p));
    const auto& [sub, x] = it->second;
    std::uint64_t sylow_order = 1;
    for (auto n = G->order(); n % p == 0; n /= p) sylow_order *= p;
    if (sub.parent() != G || sub.order() != sylow_order)
      throw InputError(sub.format() + " is not a Sylow " + std::to_string(p) + "-subgroup");
    if (!ring.is_trace_one(sub, x, limits))
      throw InputError("witness for prime " + std::to_string(p) + " does not have trace one");
    out.primes.push_back(p);
    out.indices.push_back(sub.index());
  }
  for (const auto& [p, w] : witnesses)
    if (G->order() % p != 0) throw InputError("prime " + std::to_string(p) + " does not divide |G|");

  // fold: running gcd g = sum coefficients[k] * indices[k]
  Integer g = 0;
  for (auto idx : out.indices) {
    Integer u, v;
    const Integer next = extended_gcd(g, Integer(idx), u, v);
    for (auto& c : out.coefficients) c *= u;
    out.coefficients.push_back(v);
    g = next;
  }
  if (g < 0) {
    g = -g;
    for (auto& c : out.coefficients) c = -c;
  }
  if (g != 1) throw InputError("Sylow indices are not coprime (gcd " + g.str() + ")");

  for (std::size_t k = 0; k < out.primes.size(); ++k)
    out.element += out.coefficients[k] * witnesses.at(out.primes[k]).element;
  return out;
}

}  // namespace gtrace
