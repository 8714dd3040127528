#include "gtrace/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "gtrace/errors.hpp"

namespace gtrace {

GroupPtr Group::from_generators(std::vector<Permutation> generators, std::uint32_t degree,
                                const Limits& limits, std::string name) {
  if (degree == 0) throw InputError("degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InputError("generator " + g.to_cycles() + " has degree " + std::to_string(g.degree()) +
                       ", expected " + std::to_string(degree));

  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation next = s * current;
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_group_order)
          throw ResourceLimit("max_group_order", limits.max_group_order, "group closure too large");
        queue.push_back(std::move(next));
      }
    }
  }

  auto group = std::shared_ptr<Group>(new Group());
  group->name_ = std::move(name);
  group->degree_ = degree;
  group->generators_ = std::move(generators);
  group->elements_.assign(seen.begin(), seen.end());

  const std::size_t n = group->elements_.size();
  group->mul_.resize(n * n);
  group->inv_.resize(n);
  group->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      group->mul_[a * n + b] = group->index_of(group->elements_[a] * group->elements_[b]);
    group->inv_[a] = group->index_of(group->elements_[a].inverse());
    group->orders_[a] = group->elements_[a].order();
  }
  return group;
}

ElemIdx Group::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw InputError(p.to_cycles() + " is not a group element");
  return static_cast<ElemIdx>(it - elements_.begin());
}

bool Group::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

namespace {

Permutation cycle_1_to_n(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Permutation(std::move(images));
}

// Left multiplication by i and by j on {1,-1,i,-i,j,-j,k,-k}, labelled 1..8.
constexpr std::string_view kQ8LeftI = "(1 3 2 4)(5 7 6 8)";
constexpr std::string_view kQ8LeftJ = "(1 5 2 6)(3 8 4 7)";

}  // namespace

GroupPtr catalog(std::string_view name, const Limits& limits) {
  const std::string label(name);
  auto parse_n = [&](std::string_view digits) -> std::uint32_t {
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw InputError("unknown group '" + label + "'");
    return n;
  };
  auto gens = [](std::uint32_t degree, std::initializer_list<std::string_view> cycles) {
    std::vector<Permutation> out;
    for (auto c : cycles) out.push_back(Permutation::parse(c, degree));
    return out;
  };

  if (name == "V4") return Group::from_generators(gens(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), 4, limits, label);
  if (name == "S3") return Group::from_generators(gens(3, {"(1 2)", "(1 2 3)"}), 3, limits, label);
  if (name == "S4") return Group::from_generators(gens(4, {"(1 2)", "(1 2 3 4)"}), 4, limits, label);
  if (name == "A4") return Group::from_generators(gens(4, {"(1 2 3)", "(1 2)(3 4)"}), 4, limits, label);
  if (name == "Q8") return Group::from_generators(gens(8, {kQ8LeftI, kQ8LeftJ}), 8, limits, label);
  if (name.size() >= 2 && name[0] == 'C') {
    auto n = parse_n(name.substr(1));
    if (n == 0) throw InputError("C0 is not a group");
    if (n == 1) return Group::from_generators({}, 1, limits, label);
    return Group::from_generators({cycle_1_to_n(n)}, n, limits, label);
  }
  if (name.size() >= 2 && name[0] == 'D') {
    auto n = parse_n(name.substr(1));
    if (n < 3) throw InputError("Dn needs n >= 3 (use V4 or C2)");
    // reflection fixing point 1: i -> n + 2 - i
    std::vector<std::uint32_t> refl(n);
    for (std::uint32_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return Group::from_generators({cycle_1_to_n(n), Permutation(std::move(refl))}, n, limits, label);
  }
  throw InputError("unknown group '" + label + "' (expected Cn, Dn, V4, S3, S4, A4, Q8)");
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElemIdx> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!elements_.empty() && elements_.back() >= parent_->order())
    throw InputError("element index out of range");
  if (elements_.empty() || elements_.front() != Group::identity())
    throw InputError("subset lacks the identity");
  if (elements_.size() == 1) return;
  std::vector<bool> member(parent_->order(), false);
  for (auto e : elements_) member[e] = true;
  for (auto a : elements_)
    for (auto b : elements_)
      if (!member[parent_->mul(a, b)]) throw InputError("subset is not closed under multiplication");
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  std::vector<ElemIdx> all(g->order());
  for (ElemIdx i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup(g, {Group::identity()}); }

Subgroup Subgroup::generated_by(const GroupPtr& g, const std::vector<ElemIdx>& gens) {
  std::vector<bool> seen(g->order(), false);
  std::vector<ElemIdx> out{Group::identity()};
  seen[Group::identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto s : gens) {
      auto next = g->mul(s, out[head]);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  return Subgroup(g, std::move(out));
}

Subgroup Subgroup::generated_by(const GroupPtr& g, const std::vector<Permutation>& gens) {
  std::vector<ElemIdx> idx;
  for (const auto& p : gens) idx.push_back(g->index_of(p));
  return generated_by(g, idx);
}

std::vector<ElemIdx> Subgroup::generators() const {
  std::vector<ElemIdx> gens;
  std::vector<bool> covered(parent_->order(), false);
  covered[Group::identity()] = true;
  for (auto e : elements_) {
    if (covered[e]) continue;
    gens.push_back(e);
    const auto closure = generated_by(parent_, gens);
    for (auto x : closure.elements()) covered[x] = true;
  }
  return gens;
}

std::string Subgroup::format() const {
  auto gens = generators();
  if (gens.empty()) return "<()>";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += parent_->format(gens[i]);
  }
  return out + ">";
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

Subgroup conjugate_subgroup(ElemIdx g, const Subgroup& h) {
  const auto& G = h.parent();
  std::vector<ElemIdx> out;
  out.reserve(h.order());
  for (auto x : h.elements()) out.push_back(G->conj(g, x));
  return Subgroup(G, std::move(out));
}

bool are_conjugate(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  for (ElemIdx g = 0; g < a.parent()->order(); ++g)
    if (conjugate_subgroup(g, a) == b) return true;
  return false;
}

bool is_normal(const Subgroup& h) {
  for (ElemIdx g = 0; g < h.parent()->order(); ++g)
    if (!(conjugate_subgroup(g, h) == h)) return false;
  return true;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<Subgroup> prime_order_subgroup_classes(const GroupPtr& g) {
  std::vector<Subgroup> all;
  for (ElemIdx x = 1; x < g->order(); ++x) {
    if (!is_prime(g->element_order(x))) continue;
    auto c = Subgroup::generated_by(g, std::vector<ElemIdx>{x});
    if (std::find(all.begin(), all.end(), c) == all.end()) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), canonical_less);

  // all is sorted, so the first unclaimed member of each class is its least member
  std::vector<Subgroup> reps;
  std::vector<bool> claimed(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (claimed[i]) continue;
    reps.push_back(all[i]);
    for (std::size_t j = i; j < all.size(); ++j)
      if (!claimed[j] && are_conjugate(all[i], all[j])) claimed[j] = true;
  }
  return reps;
}

std::vector<std::uint32_t> left_coset_table(const GroupPtr& g, const Subgroup& h) {
  if (h.parent() != g) throw InputError("subgroup belongs to a different group");
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset_of(g->order(), kUnset);
  std::uint32_t next = 0;
  for (ElemIdx x = 0; x < g->order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    for (auto y : h.elements()) coset_of[g->mul(x, y)] = next;
    ++next;
  }
  return coset_of;
}

std::vector<ElemIdx> left_transversal(const GroupPtr& g, const Subgroup& h) {
  auto table = left_coset_table(g, h);
  std::vector<ElemIdx> reps;
  for (ElemIdx x = 0; x < g->order(); ++x)
    if (table[x] == reps.size()) reps.push_back(x);
  return reps;
}

std::vector<ElemIdx> right_transversal(const GroupPtr& g, const Subgroup& h) {
  if (h.parent() != g) throw InputError("subgroup belongs to a different group");
  std::vector<bool> seen(g->order(), false);
  std::vector<ElemIdx> reps;
  for (ElemIdx x = 0; x < g->order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (auto y : h.elements()) seen[g->mul(y, x)] = true;
  }
  return reps;
}

Subgroup sylow_subgroup(const GroupPtr& g, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::uint64_t target = 1;
  for (auto n = g->order(); n % p == 0; n /= p) target *= p;
  if (target == 1) throw InputError(std::to_string(p) + " does not divide the group order");

  auto is_p_power = [p](std::uint64_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };

  Subgroup current = Subgroup::trivial(g);
  while (current.order() < target) {
    bool grown = false;
    for (ElemIdx x = 1; x < g->order() && !grown; ++x) {
      if (current.contains(x) || !is_p_power(g->element_order(x))) continue;
      auto gens = current.generators();
      gens.push_back(x);
      auto candidate = Subgroup::generated_by(g, gens);
      if (is_p_power(candidate.order())) {
        current = std::move(candidate);
        grown = true;
      }
    }
    if (!grown) throw InternalError("p-subgroup could not be extended");
  }
  return current;
}

}  // namespace gtrace
