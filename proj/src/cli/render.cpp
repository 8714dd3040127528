#include "gtrace/render.hpp"

#include <sstream>

namespace gtrace::render {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> formatted(const Group& g, const std::vector<ElemIdx>& elems) {
  std::vector<std::string> out;
  for (auto e : elems) out.push_back(g.format(e));
  return out;
}

std::string id_set(const std::vector<std::size_t>& ids) {
  std::vector<std::string> parts;
  for (auto id : ids) parts.push_back(std::to_string(id));
  return "{" + join(parts, ", ") + "}";
}

}  // namespace

Json group_json(const Group& g) {
  std::vector<std::string> gens;
  for (const auto& p : g.generators()) gens.push_back(p.to_cycles());
  return Json{{"name", g.name().empty() ? "custom" : g.name()},
              {"order", g.order()},
              {"degree", g.degree()},
              {"generators", gens}};
}

std::string group_line(const Group& g) {
  return "group " + (g.name().empty() ? std::string("custom") : g.name()) + " (order " + std::to_string(g.order()) +
         ", degree " + std::to_string(g.degree()) + ")";
}

Json limits_json(const Limits& limits) {
  return Json{{"max_group_order", limits.max_group_order},
              {"max_lp_points", limits.max_lp_points},
              {"max_orbit_entries", limits.max_orbit_entries},
              {"max_monomials", limits.max_monomials},
              {"max_partitions", limits.max_partitions}};
}

Json classes_json(const std::vector<Subgroup>& classes) {
  Json out = Json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    out.push_back(Json{{"id", i},
                       {"generators", formatted(*c.parent(), c.generators())},
                       {"order", c.order()},
                       {"index", c.index()}});
  }
  return out;
}

std::string classes_text(const std::vector<Subgroup>& classes) {
  std::ostringstream out;
  out << "classes: " << classes.size() << "\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    out << "  [" << i << "] " << classes[i].format() << "  order " << classes[i].order() << "  index "
        << classes[i].index() << "\n";
  return out.str();
}

Json formula_json(const Formula& f) {
  Json terms = Json::array();
  for (std::size_t j = 0; j < f.s(); ++j) {
    Json term = Json::array();
    for (std::size_t i = 0; i < f.classes.size(); ++i) term.push_back(formatted(*f.group, f.rep_set(j, i)));
    terms.push_back(std::move(term));
  }
  return Json{{"classes", classes_json(f.classes)},
              {"indices", f.indices()},
              {"s", f.s()},
              {"terms", std::move(terms)}};
}

std::string formula_text(const Formula& f) {
  std::ostringstream out;
  out << "classes:\n";
  for (std::size_t i = 0; i < f.classes.size(); ++i)
    out << "  x{" << i << "}: " << f.classes[i].format() << "  order " << f.classes[i].order() << "  index "
        << f.classes[i].index() << "\n";
  out << "s = " << f.s() << "\n";
  out << "x_G =\n";
  for (std::size_t j = 0; j < f.s(); ++j) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < f.classes.size(); ++i)
      for (auto g : f.rep_set(j, i)) factors.push_back(f.group->format(g) + "·x{" + std::to_string(i) + "}");
    out << (j ? "  + " : "    ") << (factors.empty() ? std::string("1") : join(factors, " * ")) << "\n";
  }
  return out.str();
}

Json verification_json(const VerificationReport& report) {
  Json out{{"passed", report.passed()}};
  Json free{{"passed", report.freeness.passed}};
  if (report.freeness.term) free["term"] = *report.freeness.term;
  if (report.freeness.witness) free["witness"] = *report.freeness.witness;
  out["free"] = std::move(free);
  if (report.symbolic) {
    const auto& s = *report.symbolic;
    out["symbolic"] = Json{{"passed", s.passed()},
                           {"trace_unique", s.trace_unique},
                           {"product_matches", s.product_matches},
                           {"discrepancy", s.discrepancy},
                           {"x_size", s.x_size.str()},
                           {"s", s.s},
                           {"trace_terms", s.trace_terms},
                           {"a_size", s.a_size}};
  }
  if (report.ring) out["ring"] = Json{{"passed", report.ring->passed}, {"residual_terms", report.ring->residual.size()}};
  return out;
}

std::string verification_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification:\n";
  out << "  free: " << (report.freeness.passed ? "pass" : "FAIL");
  if (report.freeness.term) out << " (term " << *report.freeness.term << " fixed by element " << *report.freeness.witness << ")";
  out << "\n";
  if (report.symbolic) {
    const auto& s = *report.symbolic;
    out << "  symbolic: " << (s.passed() ? "pass" : "FAIL") << " (|X| = " << s.x_size.str()
        << ", trace terms = " << s.trace_terms << ", |A| = " << s.a_size << ")";
    if (!s.discrepancy.empty()) out << " " << s.discrepancy;
    out << "\n";
  }
  if (report.ring)
    out << "  ring: " << (report.ring->passed ? "pass" : "FAIL") << " (residual terms = " << report.ring->residual.size()
        << ")\n";
  out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

Json partition_json(const PartitionReport& report) {
  const auto& r = *report.ring;
  Json witnesses = Json::array();
  for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
    const auto& w = report.witnesses[k];
    std::vector<std::string> reps;
    for (auto p : w.representatives) reps.push_back(r.ring.var_name(VarId{p}));
    witnesses.push_back(Json{{"class", report.partition.a[k]},
                             {"element", r.ring.render(w.element)},
                             {"representatives", reps},
                             {"trace", r.ring.render(w.trace_normal_form)},
                             {"verified", static_cast<bool>(report.witness_verified[k])}});
  }
  Json certificates = Json::array();
  for (std::size_t k = 0; k < report.certificates.size(); ++k) {
    const auto& c = report.certificates[k];
    const auto& v = report.checks[k];
    certificates.push_back(Json{{"class", report.partition.b[k]},
                                {"fixed_point", r.ring.var_name(VarId{c.fixed_point})},
                                {"equivariant", v.equivariant},
                                {"kills_generator", v.kills_generator},
                                {"obstruction", std::to_string(c.subgroup.order()) + " does not divide 1"},
                                {"obstruction_holds", v.obstruction},
                                {"probes", v.probes},
                                {"probes_divisible", v.probes_divisible},
                                {"passed", v.passed()}});
  }
  return Json{{"A", report.partition.a},
              {"B", report.partition.b},
              {"regular_fallback", report.regular_fallback},
              {"ring_variables", report.ring_variables},
              {"witnesses", std::move(witnesses)},
              {"certificates", std::move(certificates)},
              {"passed", report.passed()}};
}

std::string partition_text(const PartitionReport& report) {
  const auto& r = *report.ring;
  std::ostringstream out;
  out << "partition A = " << id_set(report.partition.a) << ", B = " << id_set(report.partition.b) << "\n";
  if (report.regular_fallback)
    out << "  ring: Z[G]/(sum y - 1) on the regular G-set, " << report.ring_variables
        << " variables (B is empty: regular fallback)\n";
  else
    out << "  ring: Z[Y]/(sum y - 1), |Y| = " << report.ring_variables << "\n";
  for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
    const auto& w = report.witnesses[k];
    out << "  witness x{" << report.partition.a[k] << "} " << w.subgroup.format() << ": " << r.ring.render(w.element)
        << "  tr = " << r.ring.render(w.trace_normal_form) << "  " << (report.witness_verified[k] ? "ok" : "FAIL") << "\n";
  }
  for (std::size_t k = 0; k < report.certificates.size(); ++k) {
    const auto& c = report.certificates[k];
    const auto& v = report.checks[k];
    out << "  certificate x{" << report.partition.b[k] << "} " << c.subgroup.format() << ": "
        << r.ring.var_name(VarId{c.fixed_point}) << " -> 1, rest -> 0; equivariant "
        << (v.equivariant ? "yes" : "NO") << ", kills generator " << (v.kills_generator ? "yes" : "NO") << ", "
        << c.subgroup.order() << " ∤ 1 " << (v.obstruction ? "yes" : "NO") << ", " << v.probes << " probes "
        << (v.probes_divisible ? "divisible" : "NOT divisible") << "\n";
  }
  out << "  result: " << (report.passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace gtrace::render
