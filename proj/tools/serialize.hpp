#pragma once

#include <charrel/dold.hpp>
#include <charrel/obstruct.hpp>

#include "json.hpp"

#include <string>
#include <vector>

// Structured renderers for every report the tool emits. json is the
// canonical machine format: records are built as ordered_json so that a
// rerun with the same inputs and engine version is byte-identical. csv is a
// flat projection, text is for humans and carries no stability promise.

namespace charrel::cli {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);  // throws invalid_argument

// ---- json records, one per subcommand -------------------------------------

json dims_json(const QuotientResult& q);
json classify_json(const Codim1Report& r);
json verdict_json(const Verdict& v);
json verdict_set_json(const std::string& command, const VerdictSet& s);
json numbers_json(const NumbersReport& r);
json dold_basis_json(const QuotientResult& q);
json rank2_json(const Rank2Report& r);
json sweep_json(const SweepResult& res, unsigned n_max,
                const std::vector<unsigned>& ks, std::size_t resumed_count);
json binom_json(std::uint64_t b, std::uint64_t a);

// canonical rendering of a record (two-space indent, trailing newline)
std::string render_json(const json& j);

// ---- flat csv projections --------------------------------------------------

std::string dims_csv(const QuotientResult& q);
std::string classify_csv(const Codim1Report& r);
std::string verdict_set_csv(const VerdictSet& s);
std::string numbers_csv(const NumbersReport& r);
std::string dold_basis_csv(const QuotientResult& q);
std::string sweep_csv(const SweepResult& res);
std::string binom_csv(std::uint64_t b, std::uint64_t a);

// ---- human-oriented text ---------------------------------------------------

std::string dims_text(const QuotientResult& q);
std::string classify_text(const Codim1Report& r);
std::string verdict_set_text(const VerdictSet& s);
std::string numbers_text(const NumbersReport& r);
std::string dold_basis_text(const QuotientResult& q);
std::string sweep_text(const SweepResult& res, std::size_t resumed_count);
std::string binom_text(std::uint64_t b, std::uint64_t a);

}  // namespace charrel::cli
