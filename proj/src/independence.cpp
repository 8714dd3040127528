#include "gtrace/independence.hpp"

#include <algorithm>
#include <random>

#include "gtrace/errors.hpp"
#include "gtrace/trace_tools.hpp"

namespace gtrace {

void validate_partition(const Partition& part, std::size_t classes) {
  std::vector<int> seen(classes, 0);
  for (const auto* side : {&part.a, &part.b})
    for (auto id : *side) {
      if (id >= classes) throw InputError("class id " + std::to_string(id) + " out of range");
      if (seen[id]++) throw InputError("class id " + std::to_string(id) + " listed twice");
    }
  for (std::size_t id = 0; id < classes; ++id)
    if (!seen[id]) throw InputError("class id " + std::to_string(id) + " is in neither A nor B");
}

GSetPtr build_Y(const GroupPtr& g, const std::vector<Subgroup>& b, const std::vector<std::size_t>& tags) {
  if (b.empty()) return std::make_shared<TableGSet>(g, std::vector<std::string>{}, std::vector<Point>{});
  std::vector<GSetPtr> parts;
  for (std::size_t k = 0; k < b.size(); ++k)
    parts.push_back(coset_space(g, b[k], "P" + std::to_string(tags.empty() ? k : tags[k])));
  return disjoint_union(parts);
}

IndependenceRing build_ring(const GroupPtr& g, const std::vector<Subgroup>& classes, const Partition& part) {
  validate_partition(part, classes.size());
  if (part.b.empty())
    return IndependenceRing{GRing::regular_trace_ring(g), classes, part, {}, true};

  std::vector<Subgroup> b;
  std::vector<Point> starts;
  Point offset = 0;
  for (auto id : part.b) {
    b.push_back(classes[id]);
    starts.push_back(offset);
    offset += static_cast<Point>(classes[id].index());
  }
  return IndependenceRing{GRing::quotient_ring(build_Y(g, b, part.b)), classes, part, std::move(starts), false};
}

TraceWitness solve_witness(const IndependenceRing& r, const Subgroup& p, const Limits& limits) {
  TraceWitness w{p, {}, {}, {}};
  for (const auto& orbit : orbit_decompose(*r.ring.variables(), p).orbits) {
    if (!orbit.stabilizer.is_trivial())
      throw InputError(p.format() + " does not act freely on Y: it fixes " +
                       r.ring.var_name(VarId{orbit.representative}));
    w.representatives.push_back(orbit.representative);
    w.element += r.ring.var(orbit.representative);
  }
  w.trace_normal_form = r.ring.normal_form(r.ring.trace(p, w.element), limits);
  if (!(w.trace_normal_form == Polynomial::constant(1)))
    throw InternalError("orbit representative sum for " + p.format() + " does not have trace one");
  return w;
}

namespace {

struct CheckTriple {
  bool equivariant;
  bool kills_generator;
  bool obstruction;
};

CheckTriple run_checks(const IndependenceRing& r, const Subgroup& p, const VarAssignment& a, const Limits& limits) {
  const GRing z = GRing::integers(r.ring.group());
  return CheckTriple{
      is_equivariant(r.ring, a, z, p, limits),
      eval_hom(r.ring.relation_generator(), a, limits).is_zero(),
      p.order() > 1,  // |P| divides 1 only when |P| = 1
  };
}

}  // namespace

NonexistenceCertificate build_certificate(const IndependenceRing& r, const Subgroup& p, const Limits& limits) {
  std::size_t block = r.partition.b.size();
  for (std::size_t k = 0; k < r.partition.b.size(); ++k)
    if (r.classes[r.partition.b[k]] == p) block = k;
  if (block == r.partition.b.size()) throw InputError(p.format() + " is not a B-side class of this ring");

  NonexistenceCertificate cert{p, r.block_start[block], {}};
  cert.assignment.images.assign(r.ring.variable_count(), Polynomial{});
  cert.assignment.images[cert.fixed_point] = Polynomial::constant(1);

  auto checks = run_checks(r, p, cert.assignment, limits);
  cert.equivariant = checks.equivariant;
  cert.kills_generator = checks.kills_generator;
  cert.obstruction = checks.obstruction;
  if (!cert.holds()) throw InternalError("non-existence certificate for " + p.format() + " failed its own checks");
  return cert;
}

CertificateCheck verify_certificate(const IndependenceRing& r, const NonexistenceCertificate& cert,
                                    const Limits& limits, std::size_t samples) {
  CertificateCheck out;
  if (cert.assignment.images.size() != r.ring.variable_count()) return out;
  auto checks = run_checks(r, cert.subgroup, cert.assignment, limits);
  out.equivariant = checks.equivariant;
  out.kills_generator = checks.kills_generator;
  out.obstruction = checks.obstruction;

  // probes: 1, single variables, products of two variables, then seeded random elements
  const auto n = static_cast<Point>(r.ring.variable_count());
  std::vector<Polynomial> probes{Polynomial::constant(1)};
  for (Point x = 0; x < n && probes.size() < 5; ++x) probes.push_back(r.ring.var(x));
  for (Point x = 0; x + 1 < n && probes.size() < 8; ++x) probes.push_back(r.ring.var(x) * r.ring.var(x + 1));
  std::mt19937_64 rng(0x5eed'0001);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<Point> var(0, n - 1);
  while (probes.size() < samples) {
    Polynomial b = Polynomial::constant(coef(rng));
    for (int t = 0; t < 4; ++t) {
      Monomial m = Monomial::from_factors({{VarId{var(rng)}, 1}, {VarId{var(rng)}, static_cast<std::uint32_t>(t % 3)}});
      b.add_term(m, coef(rng));
    }
    probes.push_back(std::move(b));
  }

  const Integer order = cert.subgroup.order();
  out.probes_divisible = true;
  for (const auto& b : probes) {
    const Polynomial image = eval_hom(r.ring.trace(cert.subgroup, b), cert.assignment, limits);
    if (!image.is_constant() || image.constant_term() % order != 0) out.probes_divisible = false;
  }
  out.probes = probes.size();
  return out;
}

bool PartitionReport::passed() const {
  if (witnesses.size() != partition.a.size() || certificates.size() != partition.b.size()) return false;
  return std::all_of(witness_verified.begin(), witness_verified.end(), [](bool v) { return v; }) &&
         std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed(); });
}

PartitionReport run_partition(const GroupPtr& g, const std::vector<Subgroup>& classes, const Partition& part,
                              const Limits& limits) {
  auto ring = std::make_shared<const IndependenceRing>(build_ring(g, classes, part));
  const auto& r = *ring;
  PartitionReport out;
  out.ring = ring;
  out.partition = part;
  out.regular_fallback = r.regular_fallback;
  out.ring_variables = r.ring.variable_count();
  for (auto id : part.a) {
    out.witnesses.push_back(solve_witness(r, classes[id], limits));
    out.witness_verified.push_back(r.ring.is_trace_one(classes[id], out.witnesses.back().element, limits));
  }
  for (auto id : part.b) {
    out.certificates.push_back(build_certificate(r, classes[id], limits));
    out.checks.push_back(verify_certificate(r, out.certificates.back(), limits));
  }
  return out;
}

bool IndependenceReport::passed() const {
  return std::all_of(partitions.begin(), partitions.end(), [](const PartitionReport& p) { return p.passed(); });
}

IndependenceReport independence_report(const GroupPtr& g, const Limits& limits) {
  IndependenceReport out;
  out.classes = prime_order_subgroup_classes(g);
  const auto m = out.classes.size();
  if (m >= 63 || (std::uint64_t{1} << m) > limits.max_partitions)
    throw ResourceLimit("max_partitions", limits.max_partitions,
                        std::to_string(m) + " classes give 2^" + std::to_string(m) + " partitions");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Partition part;
    for (std::size_t id = 0; id < m; ++id) ((mask >> id) & 1 ? part.a : part.b).push_back(id);
    out.partitions.push_back(run_partition(g, out.classes, part, limits));
  }
  return out;
}

}  // namespace gtrace
