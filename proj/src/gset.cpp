#include "gtrace/gset.hpp"

#include <algorithm>

#include "gtrace/errors.hpp"

namespace gtrace {

TableGSet::TableGSet(GroupPtr group, std::vector<std::string> labels, std::vector<Point> table)
    : GSet(std::move(group)), labels_(std::move(labels)), table_(std::move(table)) {
  if (table_.size() != this->group()->order() * labels_.size())
    throw InternalError("action table has the wrong shape");
}

GSetPtr regular_gset(const GroupPtr& g) {
  const auto n = g->order();
  std::vector<std::string> labels;
  std::vector<Point> table(n * n);
  for (ElemIdx x = 0; x < n; ++x) labels.push_back(g->format(x));
  for (ElemIdx a = 0; a < n; ++a)
    for (ElemIdx x = 0; x < n; ++x) table[a * n + x] = g->mul(a, x);
  return std::make_shared<TableGSet>(g, std::move(labels), std::move(table));
}

GSetPtr coset_space(const GroupPtr& g, const Subgroup& h, const std::string& suffix) {
  auto coset_of = left_coset_table(g, h);
  auto reps = left_transversal(g, h);
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back(g->format(r) + suffix);
  std::vector<Point> table(g->order() * reps.size());
  for (ElemIdx a = 0; a < g->order(); ++a)
    for (std::size_t c = 0; c < reps.size(); ++c)
      table[a * reps.size() + c] = coset_of[g->mul(a, reps[c])];
  return std::make_shared<TableGSet>(g, std::move(labels), std::move(table));
}

GSetPtr disjoint_union(const std::vector<GSetPtr>& parts) {
  if (parts.empty()) throw InputError("disjoint union of nothing has no group; build an empty set instead");
  const auto& g = parts.front()->group();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p->group() != g) throw InputError("disjoint union of G-sets over different groups");
    total += p->size();
  }
  std::vector<std::string> labels;
  std::vector<Point> table(g->order() * total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (Point x = 0; x < p->size(); ++x) labels.push_back(p->label(x));
    for (ElemIdx a = 0; a < g->order(); ++a)
      for (Point x = 0; x < p->size(); ++x)
        table[a * total + offset + x] = static_cast<Point>(offset + p->act(a, x));
    offset += p->size();
  }
  return std::make_shared<TableGSet>(g, std::move(labels), std::move(table));
}

GSetPtr free_gset(const GroupPtr& g, std::uint32_t classes) {
  const auto n = g->order();
  const auto total = n * classes;
  std::vector<std::string> labels;
  std::vector<Point> table(n * total);
  for (std::uint32_t i = 0; i < classes; ++i)
    for (ElemIdx h = 0; h < n; ++h) labels.push_back(g->format(h) + "·x{" + std::to_string(i) + "}");
  for (ElemIdx a = 0; a < n; ++a)
    for (std::uint32_t i = 0; i < classes; ++i)
      for (ElemIdx h = 0; h < n; ++h) table[a * total + i * n + h] = free_point(*g, i, g->mul(a, h));
  return std::make_shared<TableGSet>(g, std::move(labels), std::move(table));
}

// ---------------------------------------------------------------------------

RepSetSpace::RepSetSpace(GroupPtr g, Subgroup p, const Limits& limits)
    : GSet(std::move(g)), p_(std::move(p)) {
  const auto& G = group();
  coset_of_ = left_coset_table(G, p_);
  cosets_.resize(G->order() / p_.order());
  for (ElemIdx x = 0; x < G->order(); ++x) cosets_[coset_of_[x]].push_back(x);

  std::uint64_t size = 1;
  for (std::size_t c = 0; c < cosets_.size(); ++c) {
    size *= p_.order();
    if (size > limits.max_lp_points)
      throw ResourceLimit("max_lp_points", limits.max_lp_points,
                          "rep-set space of " + p_.format() + " has " + std::to_string(p_.order()) + "^" +
                              std::to_string(cosets_.size()) + " points");
  }
  size_ = size;
}

// Ranking walks the elements in ascending order. At an element e whose coset is
// still open, every transversal that agrees with x on the elements below e and
// contains e sorts before every one that skips e. `open` is the number of ways
// to finish the still-open cosets using only elements >= e.
std::vector<ElemIdx> RepSetSpace::choices(Point x) const {
  const auto& G = group();
  std::vector<std::uint64_t> remaining(cosets_.size(), p_.order());
  constexpr auto kOpen = static_cast<ElemIdx>(-1);
  std::vector<ElemIdx> choice(cosets_.size(), kOpen);
  std::uint64_t open = size_;
  std::uint64_t rank = x;
  for (ElemIdx e = 0; e < G->order(); ++e) {
    const auto c = coset_of_[e];
    if (choice[c] != kOpen) continue;
    const std::uint64_t with_e = open / remaining[c];
    if (rank < with_e) {
      choice[c] = e;
      open = with_e;
    } else {
      rank -= with_e;
      --remaining[c];
      open = with_e * remaining[c];
    }
  }
  return choice;
}

Point RepSetSpace::from_choices(const std::vector<ElemIdx>& choice) const {
  const auto& G = group();
  std::vector<std::uint64_t> remaining(cosets_.size(), p_.order());
  std::vector<bool> decided(cosets_.size(), false);
  std::uint64_t open = size_;
  std::uint64_t rank = 0;
  for (ElemIdx e = 0; e < G->order(); ++e) {
    const auto c = coset_of_[e];
    if (decided[c]) continue;
    const std::uint64_t with_e = open / remaining[c];
    if (choice[c] == e) {
      decided[c] = true;
      open = with_e;
    } else {
      rank += with_e;
      --remaining[c];
      open = with_e * remaining[c];
    }
  }
  return static_cast<Point>(rank);
}

Point RepSetSpace::act(ElemIdx g, Point x) const {
  const auto& G = group();
  auto choice = choices(x);
  std::vector<ElemIdx> moved(choice.size());
  for (auto e : choice) {
    auto y = G->mul(g, e);
    moved[coset_of_[y]] = y;
  }
  return from_choices(moved);
}

std::vector<ElemIdx> RepSetSpace::rep_set(Point x) const {
  auto members = choices(x);
  std::sort(members.begin(), members.end());
  return members;
}

Point RepSetSpace::from_rep_set(const std::vector<ElemIdx>& members) const {
  if (members.size() != cosets_.size()) throw InputError("wrong number of coset representatives");
  constexpr auto kOpen = static_cast<ElemIdx>(-1);
  std::vector<ElemIdx> choice(cosets_.size(), kOpen);
  for (auto e : members) {
    if (e >= group()->order()) throw InputError("element index out of range");
    auto& slot = choice[coset_of_[e]];
    if (slot != kOpen) throw InputError("two representatives of the same coset");
    slot = e;
  }
  return from_choices(choice);
}

std::string RepSetSpace::label(Point x) const {
  std::string out = "{";
  auto members = rep_set(x);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += group()->format(members[i]);
  }
  return out + "}";
}

RepSetSpacePtr rep_set_space(const GroupPtr& g, const Subgroup& p, const Limits& limits) {
  if (p.parent() != g) throw InputError("subgroup belongs to a different group");
  return std::make_shared<RepSetSpace>(g, p, limits);
}

// ---------------------------------------------------------------------------

Subgroup stabilizer(const GSet& s, const Subgroup& h, Point x) {
  std::vector<ElemIdx> stab;
  for (auto a : h.elements())
    if (s.act(a, x) == x) stab.push_back(a);
  return Subgroup(h.parent(), std::move(stab));
}

OrbitDecomposition orbit_decompose(const GSet& s, const Subgroup& h) {
  if (h.parent() != s.group()) throw InputError("subgroup does not act on this G-set");
  OrbitDecomposition out;
  std::vector<bool> seen(s.size(), false);
  for (Point x = 0; x < s.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Point> members;
    std::vector<ElemIdx> stab;
    for (auto a : h.elements()) {
      auto y = s.act(a, x);
      if (y == x) stab.push_back(a);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.orbits.push_back(Orbit{x, std::move(members), Subgroup(h.parent(), std::move(stab))});
  }
  return out;
}

bool is_free(const GSet& s, const Subgroup& h) {
  for (Point x = 0; x < s.size(); ++x)
    for (auto a : h.elements())
      if (a != Group::identity() && s.act(a, x) == x) return false;
  return true;
}

std::vector<ProductOrbitRep> product_orbit_reps(const std::vector<GSetPtr>& factors, const GroupPtr& g,
                                                const Limits& limits) {
  for (const auto& f : factors)
    if (f->group() != g) throw InputError("product factor is a G-set for a different group");

  std::vector<ProductOrbitRep> level{ProductOrbitRep{{}, Subgroup::whole(g)}};
  for (const auto& factor : factors) {
    std::vector<ProductOrbitRep> next;
    std::vector<bool> seen(factor->size(), false);
    std::vector<Point> touched;
    auto push = [&](ProductOrbitRep rep) {
      if (next.size() >= limits.max_orbit_entries)
        throw ResourceLimit("max_orbit_entries", limits.max_orbit_entries,
                            "product orbit refinement produced too many representatives");
      next.push_back(std::move(rep));
    };
    for (const auto& rep : level) {
      if (rep.stabilizer.is_trivial()) {
        for (Point y = 0; y < factor->size(); ++y) {
          auto points = rep.points;
          points.push_back(y);
          push(ProductOrbitRep{std::move(points), rep.stabilizer});
        }
        continue;
      }
      for (Point y = 0; y < factor->size(); ++y) {
        if (seen[y]) continue;
        std::vector<ElemIdx> stab;
        for (auto a : rep.stabilizer.elements()) {
          auto z = factor->act(a, y);
          if (z == y) stab.push_back(a);
          if (!seen[z]) {
            seen[z] = true;
            touched.push_back(z);
          }
        }
        auto points = rep.points;
        points.push_back(y);
        push(ProductOrbitRep{std::move(points), Subgroup(g, std::move(stab))});
      }
      for (auto z : touched) seen[z] = false;
      touched.clear();
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace gtrace
