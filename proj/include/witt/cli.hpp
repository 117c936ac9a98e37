#pragma once

#include "witt/morphisms.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace witt {

// stable exit-code contract
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

enum class OutputFormat { Markdown, Json, Csv };
OutputFormat parse_format(const std::string &text);

struct RunConfig
{
	std::optional<std::string> algebra; // witt | wab | wa | wb; unset means the default grids
	std::optional<LambdaParam> lambda;
	std::optional<Rational> a, b;
	int window = 8;
	OutputFormat format = OutputFormat::Markdown;
	std::string suite = "all";
	std::uint64_t seed = 0;
	std::string target; // solve only
	std::optional<WeightFault> fault;
};

std::vector<LambdaParam> default_lambda_grid();
std::vector<std::pair<Rational, Rational>> default_ab_grid();

// the algebras a config selects, in deterministic grid order; DomainMismatch on bad combinations
std::vector<AlgebraSpec> select_algebras(const RunConfig &cfg);

struct ExpectedDims
{
	std::string cls; // parameter class the row was looked up under
	int h2 = 0, hl2 = 0, h1 = 0;
};
// class-level lookup in the embedded table; nothing for algebras outside it
std::optional<ExpectedDims> expected_dims(const AlgebraSpec &spec);

const std::vector<std::string> &verify_suites();

// notes for the user about the selection, e.g. W(a,b) with integral a != 0 is not renormalised
std::vector<std::string> selection_warnings(const std::vector<AlgebraSpec> &specs);

int cmd_tables(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_solve(const RunConfig &cfg, std::ostream &out, std::ostream &err);

struct SolveResult
{
	std::string algebra, lambda, target; // lambda empty unless W_A/W_B
	int window = 0;
	std::map<std::string, int> dims;
	std::optional<bool> crosscheck; // hl2 only: exact-sequence check
	std::vector<std::vector<std::pair<std::string, std::string>>> basis; // (variable, value) per vector
	friend bool operator==(const SolveResult &, const SolveResult &) = default;
};

SolveResult solve(const RunConfig &cfg);
std::string format_solve_json(const SolveResult &r);
SolveResult parse_solve_json(const std::string &text);

// {k, a, b, alpha, xi, inner: [[i, c]]}, rationals as strings
std::string aut_to_json(const AutSpec &s);
AutSpec aut_from_json(const std::string &text);
// {terms: [[tag, coeff]]}; ad terms carry the element text as a third entry
std::string der_to_json(const DerSpec &d);
DerSpec der_from_json(const std::string &text);

} // namespace witt
