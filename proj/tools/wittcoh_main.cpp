#include "witt/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace witt;

namespace {

struct Flags
{
	std::string algebra, lambda, a, b, format = "md", suite = "all", fault, target;
	int window = 8;
	std::uint64_t seed = 0;
};

void add_common(CLI::App *cmd, Flags &f)
{
	cmd->add_option("--algebra", f.algebra, "witt | wab | wa | wb (default: the built-in grids)")
	    ->check(CLI::IsMember({"witt", "wab", "wa", "wb"}));
	cmd->add_option("--lambda", f.lambda, "lambda for wa/wb: a rational or inf");
	cmd->add_option("--a", f.a, "a for wab");
	cmd->add_option("--b", f.b, "b for wab");
	cmd->add_option("--window", f.window, "index window N")->capture_default_str();
	cmd->add_option("--format", f.format, "md | json | csv")->capture_default_str();
	cmd->add_option("--seed", f.seed, "seed for the sampled automorphisms")->capture_default_str();
	// test hook: "n,m,delta" adds delta to the structure constant of [L_n, X_m]
	cmd->add_option("--inject-fault", f.fault)->group("");
}

RunConfig to_config(const Flags &f)
{
	RunConfig cfg;
	if (!f.algebra.empty())
		cfg.algebra = f.algebra;
	if (!f.lambda.empty())
		cfg.lambda = parse_lambda(f.lambda);
	if (!f.a.empty())
		cfg.a = parse_rational(f.a);
	if (!f.b.empty())
		cfg.b = parse_rational(f.b);
	cfg.window = f.window;
	cfg.format = parse_format(f.format);
	cfg.suite = f.suite;
	cfg.seed = f.seed;
	cfg.target = f.target;
	if (!f.fault.empty())
	{
		auto c1 = f.fault.find(','), c2 = f.fault.find(',', c1 + 1);
		if (c1 == std::string::npos || c2 == std::string::npos)
			throw Error(ErrorCode::MalformedNumber, "fault must be n,m,delta");
		cfg.fault = WeightFault{std::stoi(f.fault.substr(0, c1)), std::stoi(f.fault.substr(c1 + 1, c2 - c1 - 1)),
		                        parse_rational(f.fault.substr(c2 + 1))};
	}
	return cfg;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Cohomology, automorphisms and derivations of Witt-type Lie algebras, computed exactly on index windows"};
	app.set_config("--config", "", "flat key = value file; keys are the long flag names");
	app.footer("commands:\n"
	           "  tables            H2, HL2, H1(g;g) dimensions against the built-in expectations\n"
	           "  verify            run the verification suites\n"
	           "  solve <target>    one system (h2 | hl2 | inv | h1 | abelian | mixing) with its basis\n"
	           "exit codes: 0 ok, 1 mismatch or failed check, 2 usage error");

	Flags f;
	std::string command;
	app.add_option("command", command, "tables | verify | solve")
	    ->required()
	    ->check(CLI::IsMember({"tables", "verify", "solve"}));
	app.add_option("target", f.target, "solve target");
	add_common(&app, f);
	app.add_option("--suite", f.suite, "verify: all | jacobi | cocycle | aut | der | ext | fhom | dims")
	    ->capture_default_str();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		int rc = app.exit(e);
		return rc == 0 ? kExitOk : kExitUsage;
	}

	RunConfig cfg;
	try
	{
		cfg = to_config(f);
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	if (command == "tables")
		return cmd_tables(cfg, std::cout, std::cerr);
	if (command == "verify")
		return cmd_verify(cfg, std::cout, std::cerr);
	if (f.target.empty())
	{
		std::cerr << "error: solve needs a target\n";
		return kExitUsage;
	}
	return cmd_solve(cfg, std::cout, std::cerr);
}
