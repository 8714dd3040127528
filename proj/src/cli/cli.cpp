#include "gtrace/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "gtrace/errors.hpp"
#include "gtrace/render.hpp"
#include "gtrace/skew.hpp"

namespace gtrace::cli {

namespace {

using render::Json;

struct RunConfig {
  std::string command;
  std::string group_name;
  std::vector<std::string> gens;
  std::uint32_t degree = 0;
  bool json = false;
  bool timing = false;
  std::string output;
  Limits limits;

  std::string verify = "none";
  std::string witness;
  std::string certify;
  bool all_partitions = false;
  std::size_t samples = 20;
};

/// What a command hands back: text body, structured result, verdict.
struct Outcome {
  std::string text;
  Json result;
  bool passed = true;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, item.find_last_not_of(" \t") - b + 1));
  }
  return out;
}

GroupPtr select_group(const RunConfig& c) {
  if (c.group_name.empty() == c.gens.empty()) throw InputError("give exactly one of --group and --gens");
  if (!c.group_name.empty()) return catalog(c.group_name, c.limits);

  std::vector<std::string> texts;
  for (const auto& g : c.gens)
    for (auto& t : split(g, ';')) texts.push_back(std::move(t));
  if (texts.empty()) throw InputError("--gens has no permutations");
  std::uint32_t degree = c.degree;
  if (degree == 0) {
    static const std::regex number("[0-9]+");
    degree = 1;
    for (const auto& t : texts)
      for (std::sregex_iterator it(t.begin(), t.end(), number), end; it != end; ++it) {
        const auto& digits = it->str();
        if (digits.size() > 9) throw InputError("point out of range: " + digits);
        degree = std::max<std::uint32_t>(degree, static_cast<std::uint32_t>(std::stoul(digits)));
      }
  }
  std::vector<Permutation> perms;
  for (const auto& t : texts) perms.push_back(Permutation::parse(t, degree));
  return Group::from_generators(std::move(perms), degree, c.limits);
}

std::vector<std::size_t> parse_ids(const std::string& list, std::size_t classes, const char* flag) {
  std::vector<std::size_t> out;
  for (const auto& item : split(list, ',')) {
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw InputError(std::string(flag) + ": not a class id: " + item);
    const auto id = std::stoul(item);
    if (id >= classes)
      throw InputError(std::string(flag) + ": class id " + item + " out of range (" + std::to_string(classes) +
                       " classes)");
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InputError(std::string(flag) + ": repeated id");
  return out;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& ids, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(ids.begin(), ids.end(), i)) out.push_back(i);
  return out;
}

Outcome cmd_classes(const GroupPtr& g, const RunConfig&) {
  const auto classes = prime_order_subgroup_classes(g);
  return {render::classes_text(classes), Json{{"classes", render::classes_json(classes)}}, true};
}

Outcome cmd_formula(const GroupPtr& g, const RunConfig& c) {
  const auto f = build_formula(g, c.limits);
  Outcome o{render::formula_text(f), Json{{"formula", render::formula_json(f)}}, true};
  if (c.verify == "none") return o;

  VerificationReport report{verify_free(f), std::nullopt, std::nullopt};
  if (c.verify == "symbolic" || c.verify == "all") report.symbolic = verify_symbolic(f, c.limits);
  if (c.verify == "ring" || c.verify == "all") report.ring = verify_in_regular_ring(g, f, c.limits);
  o.text += render::verification_text(report);
  o.result["verification"] = render::verification_json(report);
  o.passed = report.passed();
  return o;
}

Outcome cmd_independence(const GroupPtr& g, const RunConfig& c) {
  const bool single = !c.witness.empty() || !c.certify.empty();
  if (single == c.all_partitions) throw InputError("give --witness/--certify or --all-partitions");

  std::vector<PartitionReport> reports;
  std::vector<Subgroup> classes;
  if (c.all_partitions) {
    auto report = independence_report(g, c.limits);
    classes = std::move(report.classes);
    reports = std::move(report.partitions);
  } else {
    classes = prime_order_subgroup_classes(g);
    Partition part;
    if (!c.witness.empty()) part.a = parse_ids(c.witness, classes.size(), "--witness");
    if (!c.certify.empty()) part.b = parse_ids(c.certify, classes.size(), "--certify");
    if (c.witness.empty()) part.a = complement(part.b, classes.size());
    if (c.certify.empty()) part.b = complement(part.a, classes.size());
    validate_partition(part, classes.size());
    reports.push_back(run_partition(g, classes, part, c.limits));
  }

  Outcome o;
  o.text = render::classes_text(classes);
  Json parts = Json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    o.text += render::partition_text(r);
    parts.push_back(render::partition_json(r));
    passed += r.passed();
  }
  o.text += "partitions passed: " + std::to_string(passed) + "/" + std::to_string(reports.size()) + "\n";
  o.passed = passed == reports.size();
  o.result = Json{{"classes", render::classes_json(classes)},
                  {"partitions", std::move(parts)},
                  {"passed", passed},
                  {"total", reports.size()}};
  return o;
}

Outcome cmd_skew(const GroupPtr& g, const RunConfig& c) {
  const SkewRing ring(GRing::regular_trace_ring(g));
  const auto x_g = regular_trace_element(g, c.limits);
  const Splitting split(ring, x_g, c.limits);
  const auto axioms = verify_skew_axioms(ring, c.samples, kSkewSeed, c.limits);
  const auto splitting = verify_splitting(split, c.samples, kSkewSeed, c.limits);
  const auto tr = ring.base().normal_form(ring.base().trace(Subgroup::whole(g), x_g), c.limits);

  auto mark = [](bool b) { return b ? std::string("pass") : std::string("FAIL"); };
  std::ostringstream text;
  text << "ring: Z[G]/(sum y - 1), " << ring.base().variable_count() << " variables\n";
  text << "x_G = " << ring.base().render(x_g) << "\n";
  text << "tr_G(x_G) = " << ring.base().render(tr) << "\n";
  text << "s(1): " << split.section(Polynomial::constant(1)).coefficients().size() << " terms\n";
  text << "bridge identity: " << mark(axioms.bridge) << " (" << axioms.bridge_checked << " spanning elements)\n";
  text << "associativity: " << mark(axioms.associativity) << " (" << axioms.samples << " samples)\n";
  text << "module action: " << mark(axioms.module_action) << " (" << axioms.samples << " samples)\n";
  text << "retraction mu(s(b)) = b: " << mark(splitting.retraction) << " (" << splitting.samples << " samples)\n";
  text << "linearity s(w.b) = w s(b): " << mark(splitting.linearity) << " (" << splitting.samples << " samples)\n";
  const bool ok = axioms.passed() && splitting.passed();
  text << "result: " << mark(ok) << "\n";

  Json result{{"x_G", ring.base().render(x_g)},
              {"trace", ring.base().render(tr)},
              {"seed", kSkewSeed},
              {"bridge", Json{{"checked", axioms.bridge_checked}, {"passed", axioms.bridge}}},
              {"associativity", Json{{"samples", axioms.samples}, {"passed", axioms.associativity}}},
              {"module_action", Json{{"samples", axioms.samples}, {"passed", axioms.module_action}}},
              {"splitting", Json{{"samples", splitting.samples},
                                 {"retraction", splitting.retraction},
                                 {"linearity", splitting.linearity}}},
              {"passed", ok}};
  return {text.str(), std::move(result), ok};
}

void add_shared(CLI::App* sub, RunConfig& c) {
  sub->add_option("--group", c.group_name, "catalog group: C<n>, D<n>, V4, S3, S4, A4, Q8");
  sub->add_option("--gens", c.gens, "generators in cycle notation, ';'-separated (repeatable)");
  sub->add_option("--degree", c.degree, "permutation degree for --gens (default: largest point)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--json", c.json, "structured output");
  sub->add_flag("--timing", c.timing, "report wall-clock time");
  sub->add_option("--output", c.output, "write the output to a file");
  sub->add_option("--limit-lp", c.limits.max_lp_points, "max points of one L_P")->check(CLI::PositiveNumber);
  sub->add_option("--limit-monomials", c.limits.max_monomials, "max monomials of an expansion")
      ->check(CLI::PositiveNumber);
  sub->add_option("--limit-partitions", c.limits.max_partitions, "max partitions for --all-partitions")
      ->check(CLI::PositiveNumber);
  sub->add_option("--limit-orbits", c.limits.max_orbit_entries, "max orbit representatives held at once")
      ->check(CLI::PositiveNumber);
  sub->add_option("--limit-order", c.limits.max_group_order, "max group order")->check(CLI::PositiveNumber);
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Trace-one elements of finite group actions on commutative rings"};
  app.name("gtrace");
  app.require_subcommand(1);

  using Command = std::function<Outcome(const GroupPtr&, const RunConfig&)>;
  std::vector<std::pair<CLI::App*, Command>> commands;

  auto* classes = app.add_subcommand("classes", "prime-order subgroups, one per conjugacy class");
  commands.emplace_back(classes, cmd_classes);

  auto* formula = app.add_subcommand("formula", "build x_G and optionally verify it");
  formula->add_option("--verify", c.verify, "none|free|symbolic|ring|all")
      ->check(CLI::IsMember({"none", "free", "symbolic", "ring", "all"}));
  commands.emplace_back(formula, cmd_formula);

  auto* independence = app.add_subcommand("independence", "witnesses and certificates in R_{A,B}");
  independence->add_option("--witness", c.witness, "class ids of A, comma-separated");
  independence->add_option("--certify", c.certify, "class ids of B, comma-separated");
  independence->add_flag("--all-partitions", c.all_partitions, "every partition of the classes");
  commands.emplace_back(independence, cmd_independence);

  auto* skew = app.add_subcommand("skew", "skew group ring splitting in the regular trace ring");
  skew->add_option("--samples", c.samples, "seeded samples per identity")->check(CLI::PositiveNumber);
  commands.emplace_back(skew, cmd_skew);

  for (auto& [sub, fn] : commands) add_shared(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Command command;
  for (auto& [sub, fn] : commands)
    if (sub->parsed()) {
      c.command = sub->get_name();
      command = fn;
    }

  const auto start = std::chrono::steady_clock::now();
  std::optional<GroupPtr> group;
  Outcome outcome;
  int code = kOk;
  std::string kind, message;
  try {
    group = select_group(c);
    outcome = command(*group, c);
    code = outcome.passed ? kOk : kVerificationFailed;
  } catch (const InputError& e) {
    code = kInputError, kind = "input", message = e.what();
  } catch (const ResourceLimit& e) {
    code = kResourceLimit, kind = "resource_limit", message = e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!kind.empty()) err << "error: " << message << "\n";
  if (!group) {
    if (c.json) out << error_json(kind, message).dump(2) << "\n";
    return code;
  }

  std::ostringstream doc;
  if (c.json) {
    Json top{{"command", c.command},
             {"group", render::group_json(**group)},
             {"limits", render::limits_json(c.limits)},
             {"result", kind.empty() ? outcome.result : error_json(kind, message)},
             {"timing", c.timing ? Json{{"seconds", seconds}} : Json(nullptr)}};
    doc << top.dump(2) << "\n";
  } else {
    doc << render::group_line(**group) << "\n" << outcome.text;
    if (c.timing) doc << "time: " << seconds << " s\n";
  }

  if (c.output.empty()) {
    out << doc.str();
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!(file << doc.str())) {
      err << "error: cannot write " << c.output << "\n";
      return kInputError;
    }
  }
  return code;
}

}  // namespace gtrace::cli
