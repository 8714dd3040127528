#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gtrace/gring.hpp"

namespace gtrace {

/// Sum of the least member of each P-orbit on the ring's variables. When P acts
/// freely on the variables this has trace 1 modulo sum(X) - 1. Throws InputError
/// if some variable has a nontrivial stabilizer in P.
Polynomial orbit_representative_sum(const GRing& ring, const Subgroup& p);

/// From a trace-one element for G, one for H:  sum over right coset
/// representatives g of H of g(x). (The h*g then run through G exactly once.)
Polynomial restrict_to_subgroup(const GRing& ring, const Polynomial& x, const Subgroup& h);

/// g(x), which has trace one for gHg^-1 whenever x has trace one for H.
Polynomial conjugate_solution(const GRing& ring, ElemIdx g, const Polynomial& x);

struct SylowWitness {
  Subgroup subgroup;
  Polynomial element;
};

struct SylowCombination {
  std::vector<std::uint64_t> primes;     // ascending
  std::vector<std::uint64_t> indices;    // [G : P_p]
  std::vector<Integer> coefficients;     // sum coefficients[k] * indices[k] = 1
  Polynomial element;                    // sum coefficients[k] * x_{P_k}
};

/// Bezout combination of trace-one elements of Sylow subgroups, one per prime
/// dividing |G|. Throws InputError when a prime is missing, a witness is not a
/// Sylow subgroup's trace-one element, or the indices are not coprime.
SylowCombination sylow_combine(const GRing& ring, const std::map<std::uint64_t, SylowWitness>& witnesses,
                               const Limits& limits = {});

}  // namespace gtrace
