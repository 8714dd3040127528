#pragma once

#include <string>

#include "json.hpp"

#include "gtrace/formula.hpp"
#include "gtrace/independence.hpp"
#include "gtrace/limits.hpp"

namespace gtrace::render {

using Json = nlohmann::json;

Json group_json(const Group& g);
std::string group_line(const Group& g);
Json limits_json(const Limits& limits);

Json classes_json(const std::vector<Subgroup>& classes);
std::string classes_text(const std::vector<Subgroup>& classes);

/// Structured formula: classes, indices, s, and per term the rep-set of every
/// class as cycle strings.
Json formula_json(const Formula& f);
/// x_G = sum_j prod_i prod_t (g_ijt)·x{i}, one term per line.
std::string formula_text(const Formula& f);

Json verification_json(const VerificationReport& report);
std::string verification_text(const VerificationReport& report);

Json partition_json(const PartitionReport& report);
std::string partition_text(const PartitionReport& report);

}  // namespace gtrace::render
