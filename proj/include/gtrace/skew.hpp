#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gtrace/gring.hpp"

namespace gtrace {

/// sum_sigma a_sigma u_sigma with coefficients in a G-ring k. Zero coefficients
/// are not stored.
class SkewElement {
 public:
  SkewElement() = default;
  static SkewElement basis(ElemIdx sigma, const Polynomial& a = Polynomial::constant(1));

  const std::map<ElemIdx, Polynomial>& coefficients() const { return coeffs_; }
  Polynomial coefficient(ElemIdx sigma) const;
  void add_term(ElemIdx sigma, const Polynomial& a);

  SkewElement& operator+=(const SkewElement& y);
  friend SkewElement operator+(SkewElement x, const SkewElement& y) { return x += y; }
  friend bool operator==(const SkewElement&, const SkewElement&) = default;

 private:
  std::map<ElemIdx, Polynomial> coeffs_;
};

/// The skew group ring k_tG:  (a u_sigma)(b u_tau) = a sigma(b) u_{sigma tau}.
class SkewRing {
 public:
  explicit SkewRing(GRing base) : base_(std::move(base)) {}

  const GRing& base() const { return base_; }
  const GroupPtr& group() const { return base_.group(); }

  SkewElement one() const { return SkewElement::basis(Group::identity()); }
  /// sum_sigma u_sigma
  SkewElement sum_of_units() const;

  SkewElement mul(const SkewElement& x, const SkewElement& y) const;
  /// (sum a_sigma u_sigma) . b = sum a_sigma sigma(b)
  Polynomial module_act(const SkewElement& x, const Polynomial& b) const;
  /// mu(x) = x . 1 = sum a_sigma
  Polynomial augmentation(const SkewElement& x) const { return module_act(x, Polynomial::constant(1)); }

  /// Coefficient-wise equality in k (after normal form when k is a quotient).
  bool equal(const SkewElement& x, const SkewElement& y, const Limits& limits = {}) const;

  /// "(a)·u[sigma] + ..." ordered by sigma; "0" when empty.
  std::string render(const SkewElement& x) const;

 private:
  GRing base_;
};

/// Section of the augmentation k_tG -> k built from a trace-one x_G:
/// s(b) = sum_sigma b sigma(x_G) u_sigma. Then mu(s(b)) = b tr_G(x_G) = b, and s is
/// k_tG-linear, so k is a direct summand of the free module k_tG.
class Splitting {
 public:
  /// Throws InputError unless tr_G(x_g) = 1 in the base ring.
  Splitting(SkewRing ring, Polynomial x_g, const Limits& limits = {});

  const SkewRing& ring() const { return ring_; }
  const Polynomial& element() const { return x_g_; }
  SkewElement section(const Polynomial& b) const;

 private:
  SkewRing ring_;
  Polynomial x_g_;
};

struct SplittingReport {
  std::size_t samples = 0;
  bool retraction = false;  // mu(s(b)) = b
  bool linearity = false;   // s(w.b) = w s(b)
  bool passed() const { return samples > 0 && retraction && linearity; }
};

/// Random small elements, reproducible from the seed.
class SkewSampler {
 public:
  SkewSampler(const GRing& ring, std::uint64_t seed) : ring_(ring), rng_(seed) {}

  Polynomial polynomial(std::size_t terms = 3, std::uint32_t max_degree = 2);
  SkewElement element(std::size_t terms = 2);

 private:
  const GRing& ring_;
  std::mt19937_64 rng_;
};

inline constexpr std::uint64_t kSkewSeed = 0x6b74'4701;

/// Checks both splitting identities on `samples` seeded pairs (w, b).
SplittingReport verify_splitting(const Splitting& s, std::size_t samples, std::uint64_t seed = kSkewSeed,
                                 const Limits& limits = {});

struct SkewAxiomReport {
  std::size_t bridge_checked = 0;
  bool bridge = false;         // (sum u_sigma).b = tr_G(b) on 1, every variable, every degree-2 monomial
  std::size_t samples = 0;
  bool associativity = false;  // (xy)z = x(yz)
  bool module_action = false;  // (xy).b = x.(y.b)

  bool passed() const { return bridge_checked > 0 && bridge && samples > 0 && associativity && module_action; }
};

SkewAxiomReport verify_skew_axioms(const SkewRing& ring, std::size_t samples, std::uint64_t seed = kSkewSeed,
                                   const Limits& limits = {});

/// x_G in the regular trace ring: the formula evaluated at the orbit
/// representative sums.
Polynomial regular_trace_element(const GroupPtr& g, const Limits& limits = {});

}  // namespace gtrace
