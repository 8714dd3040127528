#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gtrace/gring.hpp"

namespace gtrace {

/// T = A + B, recorded as positions in the class list T.
struct Partition {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

/// Throws InputError unless a and b are disjoint and cover 0..classes-1.
void validate_partition(const Partition& part, std::size_t classes);

/// Disjoint union of the coset spaces G/P over P in `b`, in list order. Point
/// labels are "<least coset element>P<tag>" with tags[k] (default k) for b[k].
GSetPtr build_Y(const GroupPtr& g, const std::vector<Subgroup>& b, const std::vector<std::size_t>& tags = {});

/// Z[Y]/(sum Y - 1) for the B-side classes. With B empty the literal
/// construction is the zero ring, so the regular G-set stands in for Y and
/// `regular_fallback` is set.
struct IndependenceRing {
  GRing ring;
  std::vector<Subgroup> classes;     // T
  Partition partition;
  std::vector<Point> block_start;    // first point of each B-block, parallel to partition.b
  bool regular_fallback = false;
};

IndependenceRing build_ring(const GroupPtr& g, const std::vector<Subgroup>& classes, const Partition& part);

struct TraceWitness {
  Subgroup subgroup;
  Polynomial element;                    // sum of the orbit representatives
  std::vector<Point> representatives;    // least point of each P-orbit on Y
  Polynomial trace_normal_form;          // normal form of tr_P(element); equals 1
};

/// Throws InputError when P fixes a point of Y (P conjugate to a B-class).
TraceWitness solve_witness(const IndependenceRing& r, const Subgroup& p, const Limits& limits = {});

/// The P-equivariant evaluation Z[Y] -> Z sending the coset eP to 1 and every
/// other point to 0. It kills sum Y - 1, so it factors through R_{A,B}; it sends
/// tr_P(x) to |P| * (image of x), so tr_P(x) = 1 would need |P| to divide 1.
struct NonexistenceCertificate {
  Subgroup subgroup;
  Point fixed_point;
  VarAssignment assignment;
  bool equivariant = false;
  bool kills_generator = false;
  bool obstruction = false;  // |P| does not divide 1

  bool holds() const { return equivariant && kills_generator && obstruction; }
};

/// Throws InputError if P is not a B-class; InternalError if a check fails.
NonexistenceCertificate build_certificate(const IndependenceRing& r, const Subgroup& p, const Limits& limits = {});

struct CertificateCheck {
  bool equivariant = false;
  bool kills_generator = false;
  bool obstruction = false;
  std::size_t probes = 0;
  bool probes_divisible = false;  // image of tr_P(b) divisible by |P| for every probe b

  bool passed() const { return equivariant && kills_generator && obstruction && probes_divisible; }
};

/// Re-derives all three checks from the assignment alone, then evaluates
/// tr_P on `samples` deterministic probe elements.
CertificateCheck verify_certificate(const IndependenceRing& r, const NonexistenceCertificate& cert,
                                    const Limits& limits = {}, std::size_t samples = 12);

struct PartitionReport {
  std::shared_ptr<const IndependenceRing> ring;
  Partition partition;
  bool regular_fallback = false;
  std::size_t ring_variables = 0;
  std::vector<TraceWitness> witnesses;             // parallel to partition.a
  std::vector<bool> witness_verified;
  std::vector<NonexistenceCertificate> certificates;  // parallel to partition.b
  std::vector<CertificateCheck> checks;

  bool passed() const;
};

PartitionReport run_partition(const GroupPtr& g, const std::vector<Subgroup>& classes, const Partition& part,
                              const Limits& limits = {});

struct IndependenceReport {
  std::vector<Subgroup> classes;
  std::vector<PartitionReport> partitions;  // A = set bits of the mask, mask ascending

  bool passed() const;
};

/// Every one of the 2^|T| partitions. Throws ResourceLimit (max_partitions).
IndependenceReport independence_report(const GroupPtr& g, const Limits& limits = {});

}  // namespace gtrace
