#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gtrace/group.hpp"
#include "gtrace/limits.hpp"

namespace gtrace {

/// Index of a point of a G-set. Index order is the canonical point order.
using Point = std::uint32_t;

/// Finite set with a left action of a materialized group.
class GSet {
 public:
  virtual ~GSet() = default;

  const GroupPtr& group() const { return group_; }
  virtual std::size_t size() const = 0;
  virtual Point act(ElemIdx g, Point x) const = 0;
  virtual std::string label(Point x) const = 0;

 protected:
  explicit GSet(GroupPtr group) : group_(std::move(group)) {}

 private:
  GroupPtr group_;
};

using GSetPtr = std::shared_ptr<const GSet>;

/// G-set with an explicit |G| x n action table.
class TableGSet final : public GSet {
 public:
  TableGSet(GroupPtr group, std::vector<std::string> labels, std::vector<Point> table);

  std::size_t size() const override { return labels_.size(); }
  Point act(ElemIdx g, Point x) const override { return table_[static_cast<std::size_t>(g) * size() + x]; }
  std::string label(Point x) const override { return labels_[x]; }

 private:
  std::vector<std::string> labels_;
  std::vector<Point> table_;
};

/// G acting on itself by left multiplication; point i is element i.
GSetPtr regular_gset(const GroupPtr& g);

/// Left cosets of `h`, ordered by least element, G acting by left multiplication.
/// Point labels are "<least element>H", or "<least element>" + `suffix` when given.
GSetPtr coset_space(const GroupPtr& g, const Subgroup& h, const std::string& suffix = "H");

/// Disjoint union; points of part k follow all points of parts < k.
GSetPtr disjoint_union(const std::vector<GSetPtr>& parts);

/// G x {0..classes-1} with g.(i, h) = (i, gh); point i*|G| + h, labelled "(h)·x{i}".
/// These are the indeterminates of the free G-ring on x{0}, ..., x{classes-1}.
GSetPtr free_gset(const GroupPtr& g, std::uint32_t classes);
inline Point free_point(const Group& g, std::uint32_t cls, ElemIdx h) {
  return static_cast<Point>(cls * g.order() + h);
}

/// The G-set L_P of all left transversals of P: sets holding exactly one element
/// of every left coset gP. Points are never materialized; a point index is the
/// rank of the set (as a sorted element list) in lexicographic order, computed
/// and inverted on demand.
class RepSetSpace final : public GSet {
 public:
  RepSetSpace(GroupPtr g, Subgroup p, const Limits& limits = {});

  const Subgroup& subgroup() const { return p_; }
  std::size_t size() const override { return size_; }
  std::size_t cosets() const { return cosets_.size(); }
  Point act(ElemIdx g, Point x) const override;
  std::string label(Point x) const override;

  /// The chosen element of each coset, cosets in left_transversal order.
  std::vector<ElemIdx> choices(Point x) const;
  Point from_choices(const std::vector<ElemIdx>& choice) const;
  /// Members in ascending order.
  std::vector<ElemIdx> rep_set(Point x) const;
  /// Inverse of rep_set; throws InputError unless `members` is a transversal.
  Point from_rep_set(const std::vector<ElemIdx>& members) const;

 private:
  Subgroup p_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<std::vector<ElemIdx>> cosets_;
  std::size_t size_ = 0;
};

using RepSetSpacePtr = std::shared_ptr<const RepSetSpace>;

/// Throws ResourceLimit (max_lp_points) when |P|^[G:P] is too large.
RepSetSpacePtr rep_set_space(const GroupPtr& g, const Subgroup& p, const Limits& limits = {});

struct Orbit {
  Point representative;        // least member
  std::vector<Point> members;  // ascending
  Subgroup stabilizer;         // of the representative, inside the acting subgroup
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;  // ordered by representative
};

OrbitDecomposition orbit_decompose(const GSet& s, const Subgroup& h);
Subgroup stabilizer(const GSet& s, const Subgroup& h, Point x);
bool is_free(const GSet& s, const Subgroup& h);

struct ProductOrbitRep {
  std::vector<Point> points;
  Subgroup stabilizer;
};

/// One representative per G-orbit of the diagonal action on the product of
/// `factors`: the lexicographically least tuple of its orbit. Refines orbit by
/// orbit (G on factor 0, then each representative's stabilizer on factor 1, ...),
/// so the product is never materialized. Throws ResourceLimit (max_orbit_entries)
/// when a refinement level holds too many representatives.
std::vector<ProductOrbitRep> product_orbit_reps(const std::vector<GSetPtr>& factors,
                                                const GroupPtr& g, const Limits& limits = {});

}  // namespace gtrace
