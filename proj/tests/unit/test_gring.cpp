#include "doctest.h"

#include <random>

#include "gtrace/errors.hpp"
#include "gtrace/gring.hpp"
#include "helpers.hpp"

using namespace gtrace;
using testing::el;
using testing::gen;

namespace {

Polynomial random_element(const GRing& r, std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3);
  std::uniform_int_distribution<Point> var(0, static_cast<Point>(r.variable_count() - 1));
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Polynomial m = Polynomial::constant(coef(rng));
    for (int d = deg(rng); d > 0; --d) m *= r.var(var(rng));
    p += m;
  }
  return p;
}

// Evaluation at integer points; the oracle for quotient arithmetic.
Integer evaluate(const Polynomial& p, const std::vector<Integer>& at) {
  Integer total = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer v = c;
    for (const auto& [var, e] : m.factors())
      for (std::uint32_t k = 0; k < e; ++k) v *= at[var.point];
    total += v;
  }
  return total;
}

}  // namespace

TEST_CASE("act") {
  const auto s3 = catalog("S3");
  const auto ring = GRing::polynomial_ring(testing::natural_gset(s3));
  const auto y1 = ring.var(0), y2 = ring.var(1), y3 = ring.var(2);
  const auto p = y1 * y1 - 2 * y2 * y3 + Polynomial::constant(5);
  CHECK(ring.act(Group::identity(), p) == p);
  CHECK(ring.act(el(s3, "(1 2 3)"), y1) == y2);
  CHECK(ring.act(el(s3, "(1 2)"), p) == y2 * y2 - 2 * y1 * y3 + Polynomial::constant(5));

  SUBCASE("ring automorphism on random inputs") {
    std::mt19937_64 rng(0xac7);
    for (int t = 0; t < 40; ++t) {
      const auto a = random_element(ring, rng), b = random_element(ring, rng);
      const ElemIdx g = static_cast<ElemIdx>(rng() % 6), h = static_cast<ElemIdx>(rng() % 6);
      CHECK(ring.act(g, a * b) == ring.act(g, a) * ring.act(g, b));
      CHECK(ring.act(g, a + b) == ring.act(g, a) + ring.act(g, b));
      CHECK(ring.act(g, ring.act(h, a)) == ring.act(s3->mul(g, h), a));
    }
  }
}

TEST_CASE("trace") {
  const auto s3 = catalog("S3");
  const auto ring = GRing::polynomial_ring(testing::natural_gset(s3));
  const auto y1 = ring.var(0), y2 = ring.var(1), y3 = ring.var(2);
  CHECK(ring.trace(Subgroup::whole(s3), Polynomial::constant(1)) == Polynomial::constant(6));
  CHECK(ring.trace(gen(s3, {"(1 2)"}), y1) == y1 + y2);
  CHECK(ring.trace(gen(s3, {"(1 2)"}), y3) == 2 * y3);

  SUBCASE("invariance and linearity over invariants") {
    std::mt19937_64 rng(0x7ace);
    for (const char* name : {"S3", "D4", "A4"}) {
      const auto g = catalog(name);
      const auto r = GRing::polynomial_ring(testing::natural_gset(g));
      for (const auto& h : {Subgroup::whole(g), sylow_subgroup(g, 2)}) {
        for (int t = 0; t < 10; ++t) {
          const auto a = random_element(r, rng), b = random_element(r, rng);
          const auto ta = r.trace(h, a);
          for (auto x : h.elements()) CHECK(r.act(x, ta) == ta);
          const Integer c = static_cast<int>(rng() % 7) - 3;
          CHECK(r.trace(h, c * a + b) == c * ta + r.trace(h, b));
          // invariant multipliers pass through the trace
          const auto inv = r.trace(Subgroup::whole(g), b);
          CHECK(r.trace(h, inv * a) == inv * ta);
        }
      }
    }
  }
}

TEST_CASE("normal_form") {
  const auto s3 = catalog("S3");
  const auto ring = GRing::quotient_ring(testing::natural_gset(s3));
  const auto y1 = ring.var(0), y2 = ring.var(1), y3 = ring.var(2);
  CHECK(ring.normal_form(y1 + y2 + y3) == Polynomial::constant(1));
  CHECK(ring.normal_form(ring.relation_generator()).is_zero());
  CHECK(ring.relation_generator() == y1 + y2 + y3 - Polynomial::constant(1));
  CHECK(ring.normal_form(y1 * (y1 + y2 + y3)) == ring.normal_form(y1));
  CHECK(ring.normal_form(y1) == Polynomial::constant(1) - y2 - y3);
  CHECK(ring.normal_form(y2) == y2);

  SUBCASE("ring without relation") {
    const auto free = GRing::polynomial_ring(testing::natural_gset(s3));
    CHECK(free.normal_form(y1 + y2 + y3) == y1 + y2 + y3);
    CHECK_FALSE(free.has_relation());
  }

  SUBCASE("laws on random inputs") {
    std::mt19937_64 rng(0x0f0f);
    const auto reg = GRing::regular_trace_ring(s3);
    for (const GRing* r : {&ring, &reg}) {
      for (int t = 0; t < 30; ++t) {
        const auto a = random_element(*r, rng), b = random_element(*r, rng);
        const auto na = r->normal_form(a), nb = r->normal_form(b);
        CHECK(na.coefficient(Monomial::variable(r->eliminated())) == 0);
        for (const auto& [m, c] : na.terms()) CHECK(m.exponent(r->eliminated()) == 0);
        CHECK(r->normal_form(na) == na);
        CHECK(r->normal_form(a + b) == r->normal_form(na + nb));
        CHECK(r->normal_form(a * b) == r->normal_form(na * nb));
        // agree at integer points on the hyperplane sum = 1
        std::vector<Integer> at(r->variable_count());
        Integer rest = 0;
        for (std::size_t k = 1; k < at.size(); ++k) {
          at[k] = static_cast<int>(rng() % 9) - 4;
          rest += at[k];
        }
        at[0] = 1 - rest;
        CHECK(evaluate(a, at) == evaluate(na, at));
      }
    }
  }

  SUBCASE("resource limit") {
    Limits tight;
    tight.max_monomials = 10;
    auto big = Polynomial::constant(1);
    for (int k = 0; k < 4; ++k) big *= y1;
    CHECK_THROWS_AS(ring.normal_form(big, tight), ResourceLimit);
  }
}

TEST_CASE("eval_hom and is_equivariant") {
  const auto s3 = catalog("S3");
  const auto p = gen(s3, {"(1 2)"});
  const auto y = coset_space(s3, p);
  const auto ring = GRing::quotient_ring(y);
  const auto z = GRing::integers(s3);

  VarAssignment phi;
  for (Point x = 0; x < y->size(); ++x) phi.images.push_back(Polynomial::constant(x == 0 ? 1 : 0));
  CHECK(eval_hom(ring.var(0), phi) == Polynomial::constant(1));
  CHECK(eval_hom(ring.var(2), phi).is_zero());
  CHECK(eval_hom(ring.relation_generator(), phi).is_zero());
  CHECK(is_equivariant(ring, phi, z, p));
  CHECK_FALSE(is_equivariant(ring, phi, z, Subgroup::whole(s3)));

  VarAssignment id;
  for (Point x = 0; x < y->size(); ++x) id.images.push_back(ring.var(x));
  CHECK(is_equivariant(ring, id, ring, Subgroup::whole(s3)));

  SUBCASE("homomorphism and trace commute on random inputs") {
    std::mt19937_64 rng(0xe7a1);
    const auto nat = GRing::polynomial_ring(testing::natural_gset(s3));
    // y_i -> y_i^2 + 1 is S3-equivariant
    VarAssignment sq;
    for (Point x = 0; x < 3; ++x) sq.images.push_back(nat.var(x) * nat.var(x) + Polynomial::constant(1));
    REQUIRE(is_equivariant(nat, sq, nat, Subgroup::whole(s3)));
    for (int t = 0; t < 25; ++t) {
      const auto a = random_element(nat, rng), b = random_element(nat, rng);
      CHECK(eval_hom(a + b, sq) == eval_hom(a, sq) + eval_hom(b, sq));
      CHECK(eval_hom(a * b, sq) == eval_hom(a, sq) * eval_hom(b, sq));
      for (const auto& h : {Subgroup::whole(s3), p}) CHECK(eval_hom(nat.trace(h, a), sq) == nat.trace(h, eval_hom(a, sq)));
    }
  }

  SUBCASE("resource limit") {
    const auto nat = GRing::polynomial_ring(testing::natural_gset(s3));
    VarAssignment wide;
    for (Point x = 0; x < 3; ++x) wide.images.push_back(nat.var(0) + nat.var(1) + nat.var(2));
    Limits tight;
    tight.max_monomials = 20;
    const auto m = nat.var(0) * nat.var(1) * nat.var(2) * nat.var(0);
    CHECK_THROWS_AS(eval_hom(m, wide, tight), ResourceLimit);
    CHECK_NOTHROW(eval_hom(m, wide));
  }
}

TEST_CASE("is_trace_one") {
  const auto s3 = catalog("S3");
  const auto ring = GRing::quotient_ring(testing::natural_gset(s3));
  CHECK(ring.is_trace_one(Subgroup::trivial(s3), Polynomial::constant(1)));
  CHECK(ring.is_trace_one(gen(s3, {"(1 2 3)"}), ring.var(0)));
  CHECK_FALSE(ring.is_trace_one(gen(s3, {"(1 2)"}), ring.var(0)));
  const auto z = GRing::integers(s3);
  CHECK_FALSE(z.is_trace_one(gen(s3, {"(1 2)"}), Polynomial::constant(1)));
  CHECK(z.is_trace_one(Subgroup::trivial(s3), Polynomial::constant(1)));
}

TEST_CASE("variable names") {
  const auto s3 = catalog("S3");
  const auto reg = GRing::regular_trace_ring(s3);
  CHECK(reg.var_name(VarId{0}) == "y[()]");
  CHECK(reg.render(reg.var(1) - Polynomial::constant(1)) == "-1 + y[(2 3)]");
  const auto free = GRing::free_ring(s3, 2);
  CHECK(free.var_name(VarId{free_point(*s3, 1, el(s3, "(1 2)"))}) == "(1 2)·x{1}");
  CHECK(free.variable_count() == 12);
  CHECK_THROWS_AS(reg.var(6), InputError);
}
