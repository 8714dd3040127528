#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gtrace {

using Integer = boost::multiprecision::cpp_int;

/// An indeterminate: a point of the variable G-set of some G-ring.
struct VarId {
  std::uint32_t point = 0;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Commutative monomial: variables with positive exponents, sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exponent = 1);
  /// Collects repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint64_t degree() const { return degree_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const { return factors_.empty(); }

  /// Image under a renaming of variables.
  Monomial renamed(const std::function<VarId(VarId)>& f) const;
  /// Drops `v`, returning its former exponent.
  std::pair<Monomial, std::uint32_t> split(VarId v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

/// Graded order: total degree first, then lexicographic on the factor lists.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.factors() < b.factors();
  }
};

/// Sparse polynomial over the integers, fully expanded and collected. Zero
/// coefficients are never stored; iteration follows GradedOrder.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, GradedOrder>;

  Polynomial() = default;
  static Polynomial constant(const Integer& c);
  static Polynomial variable(VarId v);
  static Polynomial monomial(Monomial m, const Integer& c = 1);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Integer constant_term() const;
  Integer coefficient(const Monomial& m) const;
  std::uint64_t degree() const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Integer& c, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Ring endomorphism induced by a renaming of variables.
  Polynomial renamed(const std::function<VarId(VarId)>& f) const;

  /// Canonical text: terms in GradedOrder, factors joined by '*', powers as '^k'.
  std::string to_string(const std::function<std::string(VarId)>& name) const;

 private:
  Terms terms_;
};

/// Product of the sums, computed by explicit distribution: every choice of one
/// summand per list contributes one product. Throws ResourceLimit (max_monomials)
/// when the number of products before collection would exceed `max_terms`.
Polynomial expand_product(const std::vector<std::vector<Polynomial>>& factor_sums, std::uint64_t max_terms);

}  // namespace gtrace
