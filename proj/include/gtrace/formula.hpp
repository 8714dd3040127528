#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtrace/gring.hpp"
#include "gtrace/gset.hpp"

namespace gtrace {

/// One orbit representative of the diagonal action on X = L_{P_1} x ... x L_{P_m}:
/// for each class i a point of L_{P_i}.
struct FormulaTerm {
  std::vector<Point> rep_sets;
};

/// x_G = sum_j prod_i prod_{g in w_j[i]} g(x_{P_i}).
struct Formula {
  GroupPtr group;
  std::vector<Subgroup> classes;
  std::vector<RepSetSpacePtr> factors;  // factors[i] = L_{classes[i]}
  std::vector<FormulaTerm> terms;

  std::size_t s() const { return terms.size(); }
  /// l_i = [G : P_i]
  std::vector<std::size_t> indices() const;
  /// Members of the rep-set of class i in term j, ascending.
  std::vector<ElemIdx> rep_set(std::size_t term, std::size_t cls) const;
  /// |X| = prod_i |P_i|^{l_i}
  Integer product_size() const;
};

/// Builds L_P for every class and takes one representative per orbit of X.
/// No covering or freeness checks; build_formula and build_formula_generalized
/// add those.
Formula assemble_formula(const GroupPtr& g, std::vector<Subgroup> classes, const Limits& limits = {});

/// The formula over one prime-order subgroup per conjugacy class.
Formula build_formula(const GroupPtr& g, const Limits& limits = {});

/// The free G-ring in which formula_as_polynomial lives: variable (h)·x{i} is h(x_{P_i}).
GRing formula_ring(const Formula& f);
Polynomial formula_as_polynomial(const Formula& f);

struct FreenessCheck {
  bool passed = true;
  std::optional<std::size_t> term;     // offending term
  std::optional<ElemIdx> witness;      // nontrivial element fixing it
};

/// Every term has trivial stabilizer under the diagonal action.
FreenessCheck verify_free(const Formula& f);

/// Freeness of the whole of X without enumerating it. An element x fixes some
/// transversal of P exactly when <x> acts freely on G/P (pick r in a coset zP,
/// use x^i r on its orbit; closing up needs x^k = 1 for the orbit length k).
/// So X is free iff every x != 1 has a power x^k != 1 fixing a coset of some
/// P_i. Each witness records that power and coset.
struct FreeActionCertificate {
  struct Witness {
    ElemIdx element;
    std::uint64_t power;
    std::size_t cls;
    std::uint32_t coset;  // position in left_transversal
  };
  bool passed = true;
  std::vector<Witness> witnesses;        // one per nontrivial element
  std::optional<ElemIdx> fixing_element; // element with a fixed point, on failure
};

FreeActionCertificate verify_free_action(const GroupPtr& g, const std::vector<Subgroup>& classes);

struct SymbolicCheck {
  bool trace_unique = false;     // tr_G(x_G) hits every monomial exactly once
  bool product_matches = false;  // expanded coset-sum product equals the same multiset
  std::string discrepancy;       // first difference found, empty on success
  Integer x_size;                // prod |P_i|^{l_i}
  std::size_t s = 0;
  std::size_t a_size = 0;        // distinct monomials in the coset-sum product
  std::size_t trace_terms = 0;

  bool passed() const { return trace_unique && product_matches && x_size == Integer(a_size); }
};

/// Monomial bookkeeping in the free G-ring: the trace of x_G and the product of
/// the coset sums prod_i prod_{zP_i} (sum_{g in zP_i} g(x_{P_i})) must be the same
/// sum of distinct monomials, each with coefficient 1.
SymbolicCheck verify_symbolic(const Formula& f, const Limits& limits = {});

struct RingCheck {
  bool passed = false;
  Polynomial residual;  // normal form of tr_G(x_G) - 1
};

/// Evaluates x_G in the regular trace ring, with x_{P_i} the sum of P_i-orbit
/// representatives, and checks tr_G(x_G) = 1 there.
RingCheck verify_in_regular_ring(const GroupPtr& g, const Formula& f, const Limits& limits = {});

/// Image of x_G in `ring` under (h)·x{i} -> h(witnesses[i]).
Polynomial evaluate_formula(const Formula& f, const GRing& ring, const std::vector<Polynomial>& witnesses,
                            const Limits& limits = {});

struct VerificationReport {
  FreenessCheck freeness;
  std::optional<SymbolicCheck> symbolic;
  std::optional<RingCheck> ring;

  bool passed() const {
    return freeness.passed && (!symbolic || symbolic->passed()) && (!ring || ring->passed);
  }
};

/// Every nontrivial g has a nontrivial power lying in a conjugate of some member.
bool covers_all_primes(const GroupPtr& g, const std::vector<Subgroup>& family);

struct GeneralizedFormula {
  Formula formula;
  FreenessCheck freeness;  // re-run on every construction
};

/// Same construction over an arbitrary covering family of pairwise non-conjugate
/// subgroups. Throws InputError when the family does not cover or has conjugate
/// members.
GeneralizedFormula build_formula_generalized(const GroupPtr& g, std::vector<Subgroup> family,
                                             const Limits& limits = {});

}  // namespace gtrace
