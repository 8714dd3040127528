#pragma once

#include <string>
#include <vector>

#include "gtrace/formula.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Perm to_perm(const gtrace::Permutation& p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline oracle::Subset to_subset(const gtrace::Group& g, const std::vector<gtrace::ElemIdx>& elems) {
  oracle::Subset out;
  for (auto e : elems) out.insert(to_perm(g.element(e)));
  return out;
}

inline oracle::Subset whole(const gtrace::Group& g) {
  oracle::Subset out;
  for (const auto& p : g.elements()) out.insert(to_perm(p));
  return out;
}

inline gtrace::ElemIdx el(const gtrace::GroupPtr& g, const std::string& cycles) {
  return g->index_of(gtrace::Permutation::parse(cycles, g->degree()));
}

inline gtrace::Subgroup gen(const gtrace::GroupPtr& g, const std::vector<std::string>& cycles) {
  std::vector<gtrace::ElemIdx> gens;
  for (const auto& c : cycles) gens.push_back(el(g, c));
  return gtrace::Subgroup::generated_by(g, gens);
}

/// G acting on 1..n as given.
inline gtrace::GSetPtr natural_gset(const gtrace::GroupPtr& g) {
  const auto n = g->degree();
  std::vector<std::string> labels;
  for (std::uint32_t x = 1; x <= n; ++x) labels.push_back(std::to_string(x));
  std::vector<gtrace::Point> table;
  for (const auto& p : g->elements())
    for (std::uint32_t x = 0; x < n; ++x) table.push_back(p(x));
  return std::make_shared<gtrace::TableGSet>(g, labels, table);
}

/// Catalog groups of order at most 24.
inline const std::vector<std::string>& small_catalog() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10",
                                              "C11", "C12", "C13", "C14", "C15", "C16", "C17", "C18", "C19",
                                              "C20", "C21", "C22", "C23", "C24", "V4", "S3", "Q8", "A4", "S4",
                                              "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D11", "D12"};
  return names;
}

}  // namespace testing
