#include "witt/cli.hpp"

#include "witt/extension.hpp"
#include "witt/leibniz.hpp"
#include "witt/morphisms.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace witt {

using json = nlohmann::json;

namespace {

// Runs f(0..n-1) on a small thread pool; results come back in index order.
template <class T> std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)> &f)
{
	std::vector<T> out(n);
	std::vector<std::exception_ptr> errors(n);
	std::atomic<std::size_t> next{0};
	auto work = [&] {
		for (std::size_t i; (i = next++) < n;)
		{
			try
			{
				out[i] = f(i);
			}
			catch (...)
			{
				errors[i] = std::current_exception();
			}
		}
	};
	unsigned hw = std::max(1u, std::thread::hardware_concurrency());
	std::size_t workers = std::min<std::size_t>(hw, n);
	std::vector<std::thread> pool;
	for (std::size_t w = 1; w < workers; ++w)
		pool.emplace_back(work);
	work();
	for (auto &t : pool)
		t.join();
	for (auto &e : errors)
		if (e)
			std::rethrow_exception(e);
	return out;
}

std::string family_label(const AlgebraSpec &spec)
{
	switch (spec.base_kind())
	{
	case Kind::Witt: return "W";
	case Kind::TensorDensity: return "W(a,b)";
	case Kind::SemidirectA: return "W_A";
	case Kind::SemidirectB: return "W_B";
	case Kind::Extended: break;
	}
	return "?";
}

std::string params_of(const AlgebraSpec &spec)
{
	switch (spec.base_kind())
	{
	case Kind::TensorDensity: return "a=" + spec.a().str() + ",b=" + spec.b().str();
	case Kind::SemidirectA:
	case Kind::SemidirectB: return "lambda=" + spec.lambda().str();
	default: return "";
	}
}

bool is_ab(const AlgebraSpec &spec) { return spec.is_a() || spec.is_b(); }

// a mod 1, in [0, 1)
Rational frac(const Rational &a)
{
	mpz_class fl;
	mpz_fdiv_q(fl.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
	return a - Rational(mpq_class(fl));
}

std::string csv_field(const std::string &s)
{
	if (s.find_first_of(",\"") == std::string::npos)
		return s;
	std::string r = "\"";
	for (char c : s)
		r += c == '"' ? std::string("\"\"") : std::string(1, c);
	return r + "\"";
}

std::uint64_t fnv1a(const std::string &s)
{
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char c : s)
		h = (h ^ c) * 1099511628211ull;
	return h;
}

// --- verification suites -----------------------------------------------------

struct CaseResult
{
	std::string suite, algebra, status = "pass";
	long checked = 0;
	std::string counterexample, note;
};

void fail_with(CaseResult &r, const std::string &what)
{
	if (r.status != "fail")
		r.counterexample = what;
	r.status = "fail";
}

CaseResult suite_jacobi(const AlgebraSpec &spec, int N)
{
	CaseResult r;
	char ml = spec.module_letter();
	std::vector<BasisVector> basis = basis_window(spec, N);
	for (const auto &x : basis)
		for (const auto &y : basis)
			for (const auto &z : basis)
			{
				++r.checked;
				Element d = jacobi_defect(spec, Element(x), Element(y), Element(z));
				if (!d.is_zero() && r.status == "pass")
					fail_with(r, "(" + format_basis(x, ml) + ", " + format_basis(y, ml) + ", " + format_basis(z, ml) +
					                 ") -> " + format_element(d, ml));
			}
	return r;
}

std::vector<NamedCocycle> home_cocycles(const AlgebraSpec &spec)
{
	const LambdaParam &lam = spec.lambda();
	std::vector<NamedCocycle> out{named_cocycle(CocycleId::OmegaVir, lam)};
	if (spec.is_a())
	{
		if (lam.is(0))
			out.push_back(named_cocycle(CocycleId::Omega0A, lam));
		out.push_back(named_cocycle(CocycleId::OmegaMixA, lam));
	}
	if (spec.is_b())
	{
		out.push_back(named_cocycle(CocycleId::OmegaAbB, lam));
		out.push_back(named_cocycle(CocycleId::OmegaMixB, lam));
	}
	return out;
}

CaseResult suite_cocycle(const AlgebraSpec &spec, int N)
{
	CaseResult r;
	char ml = spec.module_letter();
	for (const auto &c : home_cocycles(spec))
	{
		++r.checked;
		auto defects = is_cocycle(spec, c, N);
		if (!defects.empty())
		{
			const auto &d = defects.front();
			fail_with(r, cocycle_label(c) + " at (" + format_basis(d.x, ml) + ", " + format_basis(d.y, ml) + ", " +
			                 format_basis(d.z, ml) + ") -> " + d.value.str());
		}
	}
	return r;
}

Rational random_rational(std::mt19937_64 &rng, bool nonzero)
{
	std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
	long p;
	do
		p = num(rng);
	while (nonzero && p == 0);
	return Rational(p, den(rng));
}

AutSpec random_aut(std::mt19937_64 &rng, const AlgebraSpec &spec, int i)
{
	AutSpec s;
	bool flips = spec.lambda().is(0) || spec.lambda().is(-1);
	s.k = flips ? i % 2 : 0;
	s.a = random_rational(rng, false);
	if (spec.is_a() || spec.lambda().is(0))
		s.b = random_rational(rng, false);
	s.alpha = random_rational(rng, true);
	s.xi = random_rational(rng, true);
	std::uniform_int_distribution<int> count(0, 3), idx(-3, 3);
	for (int j = count(rng); j > 0; --j)
		s.inner.emplace_back(idx(rng), random_rational(rng, true));
	return normalize_aut(s, spec);
}

constexpr int kAutTuples = 50;
constexpr int kAutDegree = 10;

CaseResult suite_aut(const AlgebraSpec &spec, int N, std::uint64_t seed)
{
	CaseResult r;
	char ml = spec.module_letter();
	std::mt19937_64 rng(seed ^ fnv1a(spec.name()));
	std::vector<BasisVector> basis = basis_window(spec, kAutDegree);
	for (int i = 0; i < kAutTuples; ++i)
	{
		AutSpec s1 = random_aut(rng, spec, i), s2 = random_aut(rng, spec, i / 2);
		AutSpec c = compose_auts(s1, s2, spec), inv = inverse_aut(s1, spec);
		std::string tag = format_aut(s1) + " o " + format_aut(s2);
		for (const auto &x : basis)
		{
			++r.checked;
			Element lhs = apply_aut(c, spec, Element(x));
			Element rhs = apply_aut(s1, spec, apply_aut(s2, spec, Element(x)));
			if (!(lhs == rhs))
				fail_with(r, tag + " at " + format_basis(x, ml) + ": " + format_element(lhs, ml) + " != " +
				                 format_element(rhs, ml));
			if (!(apply_aut(inv, spec, apply_aut(s1, spec, Element(x))) == Element(x)))
				fail_with(r, "inverse of " + format_aut(s1) + " at " + format_basis(x, ml));
		}
		if (!(compose_auts(inv, s1, spec) == AutSpec{}))
			fail_with(r, "inverse of " + format_aut(s1) + " composes to " + format_aut(compose_auts(inv, s1, spec)));
		auto defects = check_aut(s1, spec, N);
		if (!defects.empty())
			fail_with(r, format_aut(s1) + " breaks the bracket at (" + format_basis(defects[0].x, ml) + ", " +
			                 format_basis(defects[0].y, ml) + ")");
	}
	if (spec.is_a())
	{
		++r.checked;
		if (!inner_identity_check(spec.lambda(), N))
			fail_with(r, "inner identity fails at lambda=" + spec.lambda().str());
	}
	return r;
}

std::vector<OneParam> one_param_families(const AlgebraSpec &spec)
{
	if (spec.is_a())
		return {OneParam::Mu, OneParam::PsiA, OneParam::PhiA};
	std::vector<OneParam> out{OneParam::Mu, OneParam::PhiB};
	if (spec.lambda().is(0))
		out.push_back(OneParam::PsiB0);
	return out;
}

CaseResult suite_der(const AlgebraSpec &spec, int N)
{
	CaseResult r;
	char ml = spec.module_letter();
	std::vector<DerSpec> named = named_outer_derivations(spec);
	for (const auto &d : named)
	{
		++r.checked;
		auto defects = check_der(d, spec, N);
		if (!defects.empty())
			fail_with(r, der_gen_name(d.terms[0].gen) + " fails Leibniz rule at (" + format_basis(defects[0].x, ml) +
			                 ", " + format_basis(defects[0].y, ml) + ")");
	}
	static const char *family_names[] = {"mu", "psi_A", "phi_A", "phi_B", "psi_B0"};
	for (OneParam f : one_param_families(spec))
	{
		++r.checked;
		if (!differentiation_consistent(f, spec, N))
			fail_with(r, std::string("t-derivative of ") + family_names[static_cast<int>(f)] + " is not its derivation");
	}
	if (N < kMinWindowH1)
	{
		r.note = "kernel checks skipped below N=" + std::to_string(kMinWindowH1);
		if (r.status == "pass")
			r.status = "unstable";
		return r;
	}
	SubspaceBasis K = kernel(constraints_derivation(spec, N));
	for (const auto &v : K.vectors())
		for (const auto &[var, c] : v)
			if (var.tag == VarTag::DXL)
				fail_with(r, "kernel vector with " + var_name(var) + " = " + c.str());
	std::vector<SparseVec> gens = inner_derivations(spec, N).vectors();
	for (const auto &d : named)
		gens.push_back(derivation_vector(d, spec, N));
	SubspaceBasis span = SubspaceBasis::span(K.vars(), gens);
	++r.checked;
	for (const auto &g : gens)
		if (!in_span(K, g))
			fail_with(r, "a named or inner derivation is outside the solved kernel");
	if (span.dim() != K.dim())
		fail_with(r, "named + inner derivations span " + std::to_string(span.dim()) + " of " +
		                 std::to_string(K.dim()) + " kernel dimensions");
	return r;
}

AlgebraSpec standard_extension(const AlgebraSpec &spec)
{
	const LambdaParam &lam = spec.lambda();
	CocycleSelection sel{{named_cocycle(CocycleId::OmegaVir, lam), "Vir"}};
	if (spec.is_a())
		sel.push_back({named_cocycle(CocycleId::OmegaMixA, lam), "MixA"});
	if (spec.is_b())
	{
		sel.push_back({named_cocycle(CocycleId::OmegaAbB, lam), "AbB"});
		sel.push_back({named_cocycle(CocycleId::OmegaMixB, lam), "MixB"});
	}
	return build_central_extension(spec, sel);
}

CaseResult suite_ext(const AlgebraSpec &spec, int N)
{
	CaseResult r;
	char ml = spec.module_letter();
	AlgebraSpec ext = standard_extension(spec);
	++r.checked;
	auto defects = verify_extension(ext, N);
	if (!defects.empty())
	{
		const auto &d = defects.front();
		fail_with(r, ext.name() + " at (" + format_basis(d.x, ml) + ", " + format_basis(d.y, ml) + ", " +
		                 format_basis(d.z, ml) + ") -> " + format_element(d.value, ml));
	}
	if (spec.is_a())
	{
		++r.checked;
		if (verify_extension(cubic_mixing_extension(spec), N).empty())
			fail_with(r, "negative control: cubic mixing term passed the Jacobi check");
	}
	return r;
}

CaseResult suite_fhom(const AlgebraSpec &spec, int N)
{
	CaseResult r;
	r.checked = (2 * N + 1) * (2 * N + 1);
	auto defects = check_f_equivariance(spec.lambda(), N);
	if (!defects.empty())
	{
		const auto &d = defects.front();
		fail_with(r, "f([L" + std::to_string(d.n) + ", B" + std::to_string(d.m) + "]) = " + format_element(d.lhs, 'A') +
		                 " but [L, f(B)] = " + format_element(d.rhs, 'A'));
	}
	return r;
}

CaseResult suite_dims(const AlgebraSpec &spec, int N)
{
	CaseResult r;
	if (N < kMinWindowH2)
	{
		r.status = "unstable";
		r.note = "window below the stabilisation threshold N=" + std::to_string(kMinWindowH2);
		return r;
	}
	if (!spec.has_module())
	{
		++r.checked;
		int vir = quotient_dim(kernel(constraints_virasoro(N)), coboundary_component(spec, N, Component::Vir));
		if (vir != 1)
			fail_with(r, "dim H2 = " + std::to_string(vir) + ", expected 1");
		return r;
	}
	auto exp = expected_dims(spec);
	H2Dims h2 = h2_dimensions(spec, N);
	ExactSequenceReport es = exact_sequence_report(spec, N);
	int h1 = h1_adjoint_dimension(spec, N);
	r.checked = 4;
	if (h2_total_direct(spec, N) != h2.total)
		fail_with(r, "component split and direct solve disagree on dim H2");
	if (!es.ok)
		fail_with(r, "exact sequence check failed (image rank " + std::to_string(es.image_rank) + ")");
	if (exp && (h2.total != exp->h2 || es.hl2 != exp->hl2 || h1 != exp->h1))
		fail_with(r, "got (" + std::to_string(h2.total) + "," + std::to_string(es.hl2) + "," + std::to_string(h1) +
		                 "), expected (" + std::to_string(exp->h2) + "," + std::to_string(exp->hl2) + "," +
		                 std::to_string(exp->h1) + ") for class " + exp->cls);
	if (is_ab(spec))
	{
		int inv = spec.is_a() ? 1 : 0;
		if (es.inv != inv)
			fail_with(r, "dim Inv = " + std::to_string(es.inv) + ", expected " + std::to_string(inv));
	}
	return r;
}

bool suite_applies(const std::string &suite, const AlgebraSpec &spec)
{
	if (suite == "aut" || suite == "der")
		return is_ab(spec);
	if (suite == "fhom")
		return spec.is_a();
	return true;
}

std::string case_label(const std::string &suite, const AlgebraSpec &spec)
{
	std::string s = suite == "fhom" ? "f: B(" + spec.lambda().str() + ")->A(" + spec.lambda().str() + ")" : spec.name();
	if (spec.fault())
		s += " [fault " + std::to_string(spec.fault()->n) + "," + std::to_string(spec.fault()->m) + "]";
	return s;
}

CaseResult run_suite(const std::string &suite, const AlgebraSpec &spec, int N, std::uint64_t seed)
{
	CaseResult r;
	if (suite == "jacobi")
		r = suite_jacobi(spec, N);
	else if (suite == "cocycle")
		r = suite_cocycle(spec, N);
	else if (suite == "aut")
		r = suite_aut(spec, N, seed);
	else if (suite == "der")
		r = suite_der(spec, N);
	else if (suite == "ext")
		r = suite_ext(spec, N);
	else if (suite == "fhom")
		r = suite_fhom(spec, N);
	else
		r = suite_dims(spec, N);
	r.suite = suite;
	r.algebra = case_label(suite, spec);
	return r;
}

// --- table rows ---------------------------------------------------------------

struct TableRow
{
	std::string algebra, family, params;
	int h2 = 0, hl2 = 0, h1 = 0;
	std::optional<ExpectedDims> expected;
	bool match = false;
	std::string error; // set when the solve itself failed, e.g. on a faulted algebra
};

TableRow table_row(const AlgebraSpec &spec, int N)
{
	TableRow r;
	r.algebra = spec.name();
	r.family = family_label(spec);
	r.params = params_of(spec);
	r.expected = expected_dims(spec);
	try
	{
		r.h2 = h2_dimensions(spec, N).total;
		r.hl2 = hl2_dimension(spec, N);
		r.h1 = h1_adjoint_dimension(spec, N);
	}
	catch (const Error &e)
	{
		r.h2 = r.hl2 = r.h1 = -1;
		r.error = e.what();
		return r;
	}
	r.match = r.expected && r.expected->h2 == r.h2 && r.expected->hl2 == r.hl2 && r.expected->h1 == r.h1;
	return r;
}

} // namespace

OutputFormat parse_format(const std::string &text)
{
	if (text == "md" || text == "markdown")
		return OutputFormat::Markdown;
	if (text == "json")
		return OutputFormat::Json;
	if (text == "csv")
		return OutputFormat::Csv;
	throw Error(ErrorCode::DomainMismatch, "unknown format '" + text + "' (md, json, csv)");
}

std::vector<LambdaParam> default_lambda_grid()
{
	return {LambdaParam::finite(0), LambdaParam::finite(-1), LambdaParam::finite(1),
	        LambdaParam::finite(Rational(5, 7)), LambdaParam::infinity()};
}

std::vector<std::pair<Rational, Rational>> default_ab_grid()
{
	return {{0, 0}, {0, 1}, {0, 2}, {0, -1}, {Rational(1, 2), 0}, {3, 4}};
}

std::vector<AlgebraSpec> select_algebras(const RunConfig &cfg)
{
	auto bad = [](const std::string &why) { return Error(ErrorCode::DomainMismatch, why); };
	std::vector<AlgebraSpec> out;
	auto lambdas = cfg.lambda ? std::vector<LambdaParam>{*cfg.lambda} : default_lambda_grid();
	auto add_ab = [&]() {
		if (cfg.a.has_value() != cfg.b.has_value())
			throw bad("--a and --b go together");
		if (cfg.a)
			out.push_back(AlgebraSpec::tensor_density(*cfg.a, *cfg.b));
		else
			for (const auto &[a, b] : default_ab_grid())
				out.push_back(AlgebraSpec::tensor_density(a, b));
	};
	std::string alg = cfg.algebra.value_or("");
	if ((alg == "witt" || alg == "wa" || alg == "wb") && (cfg.a || cfg.b))
		throw bad("--a/--b only apply to wab");
	if ((alg == "witt" || alg == "wab") && cfg.lambda)
		throw bad("--lambda only applies to wa and wb");
	if (alg == "witt")
		out.push_back(AlgebraSpec::witt());
	else if (alg == "wa")
		for (const auto &l : lambdas)
			out.push_back(AlgebraSpec::semidirect_a(l));
	else if (alg == "wb")
		for (const auto &l : lambdas)
			out.push_back(AlgebraSpec::semidirect_b(l));
	else if (alg == "wab")
		add_ab();
	else if (alg.empty())
	{
		if (cfg.lambda && (cfg.a || cfg.b))
			throw bad("give either --lambda or --a/--b without --algebra");
		if (!cfg.a && !cfg.b)
		{
			for (const auto &l : lambdas)
				out.push_back(AlgebraSpec::semidirect_a(l));
			for (const auto &l : lambdas)
				out.push_back(AlgebraSpec::semidirect_b(l));
		}
		if (!cfg.lambda)
			add_ab();
	}
	else
		throw bad("unknown algebra '" + alg + "' (witt, wab, wa, wb)");
	if (cfg.fault)
		for (auto &s : out)
			if (s.has_module())
				s = s.with_fault(*cfg.fault);
	return out;
}

std::optional<ExpectedDims> expected_dims(const AlgebraSpec &spec)
{
	if (spec.kind() == Kind::Extended)
		return std::nullopt;
	const LambdaParam &lam = spec.lambda();
	switch (spec.base_kind())
	{
	case Kind::SemidirectA:
		return lam.is(0) ? ExpectedDims{"W_A(0)", 3, 4, 2} : ExpectedDims{"W_A(lambda!=0)", 2, 3, 2};
	case Kind::SemidirectB:
		return lam.is(0) ? ExpectedDims{"W_B(0)", 3, 3, 3} : ExpectedDims{"W_B(lambda!=0)", 3, 3, 2};
	case Kind::TensorDensity:
	{
		// I(a,b) only depends on a mod Z
		Rational a = frac(spec.a()), b = spec.b();
		if (a.is_zero())
		{
			if (b == Rational(0))
				return ExpectedDims{"W(0,0)", 3, 3, 3};
			if (b == Rational(1))
				return ExpectedDims{"W(0,1)", 3, 4, 2};
			if (b == Rational(2))
				return ExpectedDims{"W(0,2)", 1, 2, 2};
			if (b == Rational(-1))
				return ExpectedDims{"W(0,-1)", 2, 2, 1};
		}
		if (a == Rational(1, 2) && (b == Rational(0) || b == Rational(1)))
			return ExpectedDims{"W(1/2,0)", 2, 2, 1};
		return ExpectedDims{"W(a,b) generic", 1, 1, 1};
	}
	default: return std::nullopt;
	}
}

std::vector<std::string> selection_warnings(const std::vector<AlgebraSpec> &specs)
{
	std::vector<std::string> out;
	for (const auto &s : specs)
		if (s.base_kind() == Kind::TensorDensity && s.a().is_integer() && !s.a().is_zero())
			out.push_back(s.name() + ": a is an integer; I(a,b) is isomorphic to I(0,b) but a is used as given");
	return out;
}

const std::vector<std::string> &verify_suites()
{
	static const std::vector<std::string> s{"jacobi", "cocycle", "aut", "der", "ext", "fhom", "dims"};
	return s;
}

int cmd_tables(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	std::vector<AlgebraSpec> specs;
	try
	{
		specs = select_algebras(cfg);
	}
	catch (const Error &e)
	{
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	if (cfg.window < kMinWindowH2)
	{
		err << "error: tables need --window >= " << kMinWindowH2 << "\n";
		return kExitUsage;
	}
	for (const auto &w : selection_warnings(specs))
		err << "warning: " << w << "\n";
	for (const auto &s : specs)
		if (!s.has_module())
		{
			err << "error: tables cover W(a,b), W_A and W_B only\n";
			return kExitUsage;
		}
	int N = cfg.window;
	std::vector<TableRow> rows =
	    parallel_map<TableRow>(specs.size(), [&](std::size_t i) { return table_row(specs[i], N); });
	bool all = std::all_of(rows.begin(), rows.end(), [](const TableRow &r) { return r.match; });

	switch (cfg.format)
	{
	case OutputFormat::Json:
	{
		json j;
		j["window"] = N;
		j["status"] = all ? "pass" : "fail";
		j["rows"] = json::array();
		for (const auto &r : rows)
		{
			json row{{"algebra", r.algebra}, {"family", r.family}, {"params", r.params}, {"h2", r.h2},
			         {"hl2", r.hl2},         {"h1", r.h1},         {"match", r.match}};
			if (!r.error.empty())
				row["error"] = r.error;
			if (r.expected)
				row["expected"] = {{"class", r.expected->cls},
				                   {"h2", r.expected->h2},
				                   {"hl2", r.expected->hl2},
				                   {"h1", r.expected->h1}};
			j["rows"].push_back(row);
		}
		out << j.dump(2) << "\n";
		break;
	}
	case OutputFormat::Csv:
		out << "algebra,family,params,h2,hl2,h1,class,expected_h2,expected_hl2,expected_h1,match\n";
		for (const auto &r : rows)
		{
			out << csv_field(r.algebra) << "," << csv_field(r.family) << "," << csv_field(r.params) << "," << r.h2
			    << "," << r.hl2 << "," << r.h1 << ",";
			if (r.expected)
				out << csv_field(r.expected->cls) << "," << r.expected->h2 << "," << r.expected->hl2 << ","
				    << r.expected->h1;
			else
				out << ",,,";
			out << "," << (r.match ? "yes" : "no") << "\n";
		}
		break;
	case OutputFormat::Markdown:
		out << "Cohomology dimensions at N = " << N << "\n\n";
		out << "| algebra | params | dim H2 | dim HL2 | dim H1(g;g) | expected | match |\n";
		out << "|---|---|---|---|---|---|---|\n";
		for (const auto &r : rows)
		{
			out << "| " << r.algebra << " | " << r.params << " | " << r.h2 << " | " << r.hl2 << " | " << r.h1 << " | ";
			if (r.expected)
				out << "(" << r.expected->h2 << ", " << r.expected->hl2 << ", " << r.expected->h1 << ") "
				    << r.expected->cls;
			else
				out << "-";
			out << " | " << (r.match ? "yes" : r.error.empty() ? "NO" : "NO (" + r.error + ")") << " |\n";
		}
		break;
	}
	return all ? kExitOk : kExitMismatch;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	std::vector<AlgebraSpec> specs;
	try
	{
		specs = select_algebras(cfg);
	}
	catch (const Error &e)
	{
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	if (cfg.window < 1)
	{
		err << "error: --window must be positive\n";
		return kExitUsage;
	}
	std::vector<std::string> suites;
	if (cfg.suite == "all")
		suites = verify_suites();
	else if (std::find(verify_suites().begin(), verify_suites().end(), cfg.suite) != verify_suites().end())
		suites = {cfg.suite};
	else
	{
		err << "error: unknown suite '" << cfg.suite << "'\n";
		return kExitUsage;
	}

	std::vector<std::pair<std::string, const AlgebraSpec *>> jobs;
	for (const auto &s : suites)
		for (const auto &spec : specs)
			if (suite_applies(s, spec))
				jobs.emplace_back(s, &spec);
	std::vector<CaseResult> cases = parallel_map<CaseResult>(jobs.size(), [&](std::size_t i) {
		try
		{
			return run_suite(jobs[i].first, *jobs[i].second, cfg.window, cfg.seed);
		}
		catch (const Error &e)
		{
			CaseResult r;
			r.suite = jobs[i].first;
			r.algebra = case_label(jobs[i].first, *jobs[i].second);
			if (e.code() == ErrorCode::WindowTooSmall)
			{
				r.status = "unstable";
				r.note = e.what();
			}
			else
				fail_with(r, e.what());
			return r;
		}
	});

	bool failed = std::any_of(cases.begin(), cases.end(), [](const CaseResult &c) { return c.status == "fail"; });
	std::vector<std::string> warnings = selection_warnings(specs);
	for (const auto &c : cases)
		if (c.status == "unstable")
			warnings.push_back(c.suite + " " + c.algebra + ": " + c.note);

	switch (cfg.format)
	{
	case OutputFormat::Json:
	{
		json j;
		j["seed"] = cfg.seed;
		j["window"] = cfg.window;
		j["status"] = failed ? "fail" : "pass";
		j["warnings"] = warnings;
		j["suites"] = json::array();
		for (const auto &s : suites)
		{
			json cs = json::array();
			bool sf = false;
			for (const auto &c : cases)
			{
				if (c.suite != s)
					continue;
				json jc{{"algebra", c.algebra}, {"status", c.status}, {"checked", c.checked}};
				if (!c.counterexample.empty())
					jc["counterexample"] = c.counterexample;
				if (!c.note.empty())
					jc["note"] = c.note;
				sf = sf || c.status == "fail";
				cs.push_back(jc);
			}
			j["suites"].push_back({{"suite", s}, {"status", sf ? "fail" : "pass"}, {"cases", cs}});
		}
		out << j.dump(2) << "\n";
		break;
	}
	case OutputFormat::Csv:
		out << "suite,algebra,status,checked,counterexample\n";
		for (const auto &c : cases)
			out << c.suite << "," << csv_field(c.algebra) << "," << c.status << "," << c.checked << ","
			    << csv_field(c.counterexample.empty() ? c.note : c.counterexample) << "\n";
		break;
	case OutputFormat::Markdown:
		out << "Verification at N = " << cfg.window << ", seed " << cfg.seed << ": " << (failed ? "FAIL" : "pass")
		    << "\n\n| suite | algebra | status | checked | detail |\n|---|---|---|---|---|\n";
		for (const auto &c : cases)
			out << "| " << c.suite << " | " << c.algebra << " | " << c.status << " | " << c.checked << " | "
			    << (c.counterexample.empty() ? c.note : c.counterexample) << " |\n";
		break;
	}
	for (const auto &w : warnings)
		err << "warning: " << w << "\n";
	return failed ? kExitMismatch : kExitOk;
}

SolveResult solve(const RunConfig &cfg)
{
	if (!cfg.algebra)
		throw Error(ErrorCode::DomainMismatch, "solve needs --algebra");
	std::vector<AlgebraSpec> specs = select_algebras(cfg);
	if (specs.size() != 1)
		throw Error(ErrorCode::DomainMismatch, "solve needs a single algebra instance (give its parameters)");
	const AlgebraSpec &spec = specs.front();
	int N = cfg.window;
	SolveResult r;
	r.algebra = spec.name();
	r.target = cfg.target;
	r.window = N;
	if (is_ab(spec))
		r.lambda = spec.lambda().str();
	auto emit = [&](const SubspaceBasis &b) {
		for (const auto &v : b.vectors())
		{
			std::vector<std::pair<std::string, std::string>> row;
			for (const auto &[k, c] : v)
				row.emplace_back(var_name(k), c.str());
			r.basis.push_back(std::move(row));
		}
	};
	const std::string &t = cfg.target;
	if (!spec.has_module())
	{
		if (t != "h2")
			throw Error(ErrorCode::NoModuleFamily, "only h2 is available for W");
		if (N < kMinWindowH2)
			throw Error(ErrorCode::WindowTooSmall, "H2 needs N >= " + std::to_string(kMinWindowH2));
		SubspaceBasis q = quotient_basis(kernel(constraints_virasoro(N)), coboundary_component(spec, N, Component::Vir));
		r.dims = {{"vir", static_cast<int>(q.dim())}, {"total", static_cast<int>(q.dim())}};
		emit(q);
		return r;
	}
	if (t == "h2")
	{
		H2Dims d = h2_dimensions(spec, N);
		r.dims = {{"vir", d.vir}, {"ab", d.ab}, {"mix", d.mix}, {"total", d.total}};
		emit(quotient_basis(kernel(constraints_h2_full(spec, N)), coboundary_space_h2(spec, N)));
	}
	else if (t == "abelian" || t == "mixing")
	{
		Component c = t == "abelian" ? Component::Ab : Component::Mix;
		SubspaceBasis z = kernel(constraints_component(spec, N, c));
		SubspaceBasis b = coboundary_component(spec, N, c);
		r.dims = {{"cocycles", static_cast<int>(z.dim())},
		          {"coboundaries", static_cast<int>(b.dim())},
		          {"cohomology", quotient_dim(z, b)}};
		emit(z);
	}
	else if (t == "hl2")
	{
		ExactSequenceReport es = exact_sequence_report(spec, N);
		SubspaceBasis z = kernel(constraints_leibniz(spec, N));
		r.dims = {{"h2", es.h2}, {"hl2", es.hl2}, {"inv", es.inv}, {"cocycles", static_cast<int>(z.dim())}};
		r.crosscheck = es.ok;
		emit(quotient_basis(z, leibniz_coboundaries(spec, N)));
	}
	else if (t == "inv")
	{
		SubspaceBasis z = kernel(constraints_invariant_form(spec, N));
		r.dims = {{"inv", static_cast<int>(z.dim())}};
		emit(z);
	}
	else if (t == "h1")
	{
		int d = h1_adjoint_dimension(spec, N);
		SubspaceBasis z = kernel(constraints_derivation(spec, N));
		SubspaceBasis inner = inner_derivations(spec, N);
		r.dims = {{"h1", d}, {"derivations", static_cast<int>(z.dim())}, {"inner", static_cast<int>(inner.dim())}};
		emit(quotient_basis(z, inner));
	}
	else
		throw Error(ErrorCode::DomainMismatch, "unknown target '" + t + "' (h2, hl2, inv, h1, abelian, mixing)");
	return r;
}

std::string format_solve_json(const SolveResult &r)
{
	json j;
	j["algebra"] = r.algebra;
	if (!r.lambda.empty())
		j["lambda"] = r.lambda;
	j["target"] = r.target;
	if (r.crosscheck)
		j["crosscheck"] = *r.crosscheck;
	j["window"] = r.window;
	j["dims"] = r.dims;
	j["basis"] = json::array();
	for (const auto &v : r.basis)
	{
		json arr = json::array();
		for (const auto &[k, c] : v)
			arr.push_back(json::array({k, c}));
		j["basis"].push_back(arr);
	}
	return j.dump(2);
}

SolveResult parse_solve_json(const std::string &text)
{
	json j = json::parse(text);
	SolveResult r;
	r.algebra = j.at("algebra").get<std::string>();
	r.lambda = j.value("lambda", std::string());
	r.target = j.at("target").get<std::string>();
	if (j.contains("crosscheck"))
		r.crosscheck = j.at("crosscheck").get<bool>();
	r.window = j.at("window").get<int>();
	r.dims = j.at("dims").get<std::map<std::string, int>>();
	for (const auto &v : j.at("basis"))
	{
		std::vector<std::pair<std::string, std::string>> row;
		for (const auto &e : v)
			row.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
		r.basis.push_back(std::move(row));
	}
	return r;
}

int cmd_solve(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	SolveResult r;
	try
	{
		r = solve(cfg);
	}
	catch (const Error &e)
	{
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	switch (cfg.format)
	{
	case OutputFormat::Markdown:
	{
		out << r.algebra << " " << r.target << " at N = " << r.window << "\n\n";
		for (const auto &[k, v] : r.dims)
			out << "- " << k << ": " << v << "\n";
		if (r.crosscheck)
			out << "- exact sequence check: " << (*r.crosscheck ? "ok" : "FAILED") << "\n";
		out << "\nbasis:\n";
		for (const auto &v : r.basis)
		{
			out << "-";
			for (const auto &[k, c] : v)
				out << " " << k << "=" << c;
			out << "\n";
		}
		break;
	}
	case OutputFormat::Csv:
		out << "vector,variable,value\n";
		for (std::size_t i = 0; i < r.basis.size(); ++i)
			for (const auto &[k, c] : r.basis[i])
				out << i << "," << csv_field(k) << "," << c << "\n";
		break;
	case OutputFormat::Json: out << format_solve_json(r) << "\n"; break;
	}
	return kExitOk;
}

std::string aut_to_json(const AutSpec &s)
{
	json inner = json::array();
	for (const auto &[i, c] : s.inner)
		inner.push_back(json::array({i, c.str()}));
	json j{{"k", s.k}, {"a", s.a.str()}, {"b", s.b.str()}, {"alpha", s.alpha.str()}, {"xi", s.xi.str()}, {"inner", inner}};
	return j.dump();
}

AutSpec aut_from_json(const std::string &text)
{
	json j = json::parse(text);
	AutSpec s;
	s.k = j.at("k").get<int>();
	s.a = parse_rational(j.at("a").get<std::string>());
	s.b = parse_rational(j.at("b").get<std::string>());
	s.alpha = parse_rational(j.at("alpha").get<std::string>());
	s.xi = parse_rational(j.at("xi").get<std::string>());
	for (const auto &e : j.at("inner"))
		s.inner.emplace_back(e.at(0).get<int>(), parse_rational(e.at(1).get<std::string>()));
	return s;
}

std::string der_to_json(const DerSpec &d)
{
	json terms = json::array();
	for (const auto &t : d.terms)
	{
		json e = json::array({der_gen_name(t.gen), t.coeff.str()});
		if (t.gen == DerGen::AdInner)
			e.push_back(format_element(t.inner));
		terms.push_back(e);
	}
	return json{{"terms", terms}}.dump();
}

DerSpec der_from_json(const std::string &text)
{
	static const std::map<std::string, DerGen> gens{{"ad", DerGen::AdInner},         {"d_Ab", DerGen::DAb},
	                                                {"delta_A", DerGen::DeltaA},      {"partial_A", DerGen::PartialA},
	                                                {"d_B", DerGen::DB},              {"partial_B0", DerGen::PartialB0}};
	json j = json::parse(text);
	DerSpec d;
	for (const auto &e : j.at("terms"))
	{
		auto it = gens.find(e.at(0).get<std::string>());
		if (it == gens.end())
			throw Error(ErrorCode::DomainMismatch, "unknown derivation tag " + e.at(0).dump());
		DerTerm t{it->second, parse_rational(e.at(1).get<std::string>()), {}};
		if (t.gen == DerGen::AdInner)
			t.inner = parse_element(e.at(2).get<std::string>());
		d.terms.push_back(std::move(t));
	}
	return d;
}

} // namespace witt
