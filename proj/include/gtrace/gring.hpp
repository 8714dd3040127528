#pragma once

#include <string>
#include <vector>

#include "gtrace/gset.hpp"
#include "gtrace/limits.hpp"
#include "gtrace/polynomial.hpp"

namespace gtrace {

/// A G-ring presented as Z[X] for a G-set X, optionally modulo the invariant
/// relation  sum_{x in X} x - 1.  Quotient arithmetic eliminates the least
/// variable (point 0) by substituting 1 - (sum of the others).
class GRing {
 public:
  enum class Naming { Bracketed, Plain };

  /// Z[X]; variables print as y[label].
  static GRing polynomial_ring(GSetPtr variables);
  /// Z[X]/(sum X - 1); variables print as y[label].
  static GRing quotient_ring(GSetPtr variables);
  /// Free G-ring on x{0}, ..., x{classes-1}; variables print as (g)·x{i}.
  static GRing free_ring(const GroupPtr& g, std::uint32_t classes);
  /// Z with the trivial action.
  static GRing integers(const GroupPtr& g);
  /// Z[{y_g : g in G}]/(sum y_g - 1) with left translation.
  static GRing regular_trace_ring(const GroupPtr& g);

  const GroupPtr& group() const { return variables_->group(); }
  const GSetPtr& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_->size(); }
  bool has_relation() const { return has_relation_; }
  VarId eliminated() const { return VarId{0}; }

  Polynomial var(Point x) const;
  /// sum_{x in X} x - 1
  Polynomial relation_generator() const;

  Polynomial act(ElemIdx g, const Polynomial& p) const;
  /// sum_{h in H} h(p)
  Polynomial trace(const Subgroup& h, const Polynomial& p) const;

  /// Representative with the eliminated variable substituted away. Identity when
  /// the ring has no relation. Throws ResourceLimit (max_monomials) on blow-up.
  Polynomial normal_form(const Polynomial& p, const Limits& limits = {}) const;
  bool equal(const Polynomial& p, const Polynomial& q, const Limits& limits = {}) const;

  /// tr_H(x) == 1 in this ring.
  bool is_trace_one(const Subgroup& h, const Polynomial& x, const Limits& limits = {}) const;

  std::string var_name(VarId v) const;
  std::string render(const Polynomial& p) const;

 private:
  GRing(GSetPtr variables, bool relation, Naming naming);

  GSetPtr variables_;
  bool has_relation_;
  Naming naming_;
};

/// Images of the source ring's variables, indexed by point, as polynomials of a
/// target ring (constants when the target is the integers).
struct VarAssignment {
  std::vector<Polynomial> images;
};

/// The unique ring homomorphism extending `a`. Throws ResourceLimit
/// (max_monomials) when expanding a monomial's image would exceed the bound.
Polynomial eval_hom(const Polynomial& p, const VarAssignment& a, const Limits& limits = {});

/// a(h.v) == h.a(v) in `target` for every h in H and every source variable v.
bool is_equivariant(const GRing& source, const VarAssignment& a, const GRing& target, const Subgroup& h,
                    const Limits& limits = {});

}  // namespace gtrace
