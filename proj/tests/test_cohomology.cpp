#include "witt/cohomology.hpp"

#include "oracle/dense_oracle.hpp"

#include <doctest.h>

using namespace witt;

namespace {

LambdaParam lam(const char *s) { return parse_lambda(s); }
AlgebraSpec wa(const char *s) { return AlgebraSpec::semidirect_a(lam(s)); }
AlgebraSpec wb(const char *s) { return AlgebraSpec::semidirect_b(lam(s)); }
AlgebraSpec wab(Rational a, Rational b) { return AlgebraSpec::tensor_density(a, b); }

SparseVec restrict_to(const SparseVec &v, const std::set<VarIndex> &vars)
{
	SparseVec out;
	for (const auto &[k, c] : v)
		if (vars.count(k))
			out.emplace(k, c);
	return out;
}

SparseVec function_vector(const std::set<VarIndex> &vars, auto f)
{
	SparseVec out;
	for (const auto &k : vars)
		if (Rational c = f(k.n); !c.is_zero())
			out.emplace(k, c);
	return out;
}

int rank_of(const std::set<VarIndex> &vars, const std::vector<SparseVec> &vecs)
{
	return static_cast<int>(SubspaceBasis::span(vars, vecs).dim());
}

} // namespace

TEST_CASE("Virasoro constraints")
{
	CHECK(kernel(constraints_virasoro(8)).dim() == 2);
	CHECK(kernel(constraints_virasoro(3)).dim() == 2);
	CHECK_THROWS_AS(constraints_virasoro(2), Error);
	LinearSystem sys = constraints_virasoro(8);
	SparseVec vir = function_vector(sys.vars(), [](int n) { return Rational(n * (n * n - 1), 12); });
	for (const auto &row : sys.rows())
		CHECK(dot(row, vir).is_zero());
	// kernel is {a n³ + b n}
	SubspaceBasis k = kernel(sys);
	CHECK(in_span(k, function_vector(sys.vars(), [](int n) { return Rational(n * n * n); })));
	CHECK(in_span(k, function_vector(sys.vars(), [](int n) { return Rational(n); })));
	CHECK_FALSE(in_span(k, function_vector(sys.vars(), [](int n) { return Rational(n * n); })));
}

TEST_CASE("abelian constraints")
{
	CHECK(kernel(constraints_abelian(wa("5/7"), 6)).dim() == 0);
	SubspaceBasis k = kernel(constraints_abelian(wb("1"), 6));
	REQUIRE(k.dim() == 1);
	CHECK(in_span(k, function_vector(k.vars(), [](int n) { return Rational(n); })));
	CHECK(kernel(constraints_abelian(wb("inf"), 4)).dim() == 1);
	CHECK_THROWS_AS(constraints_abelian(AlgebraSpec::witt(), 6), Error);
	// α(0) is never a variable
	for (const auto &v : cochain_vars(wb("1"), 6, Component::Ab))
		CHECK(v.n > 0);
}

TEST_CASE("mixing constraints")
{
	SubspaceBasis a0 = kernel(constraints_mixing(wa("0"), 6));
	CHECK(a0.dim() == 2);
	CHECK(kernel(constraints_mixing(wa("5/7"), 6)).dim() == 1);
	CHECK(kernel(constraints_mixing(wb("2"), 6)).dim() == 2);
	CHECK_THROWS_AS(constraints_mixing(AlgebraSpec::witt(), 6), Error);

	// the kernels are the restrictions of the named cocycles
	auto mixing_restriction = [](const AlgebraSpec &spec, const NamedCocycle &c, int N) {
		return restrict_to(restrict_named(spec, c, N), cochain_vars(spec, N, Component::Mix));
	};
	std::vector<SparseVec> named{
	    mixing_restriction(wa("0"), named_function(CocycleId::BetaLambda, lam("0"), Placement::Mixing), 6),
	    mixing_restriction(wa("0"), named_function(CocycleId::Iota, lam("0"), Placement::Mixing), 6)};
	CHECK(SubspaceBasis::span(a0.vars(), named).vectors() == a0.vectors());
	for (const char *l : {"-1", "1", "5/7", "inf"})
	{
		SubspaceBasis k = kernel(constraints_mixing(wa(l), 6));
		auto beta = mixing_restriction(wa(l), named_function(CocycleId::BetaLambda, lam(l), Placement::Mixing), 6);
		CHECK(SubspaceBasis::span(k.vars(), {beta}).vectors() == k.vectors());
	}
	SubspaceBasis b2 = kernel(constraints_mixing(wb("2"), 6));
	for (CocycleId id : {CocycleId::Gamma1, CocycleId::Gamma2})
		CHECK(in_span(b2, mixing_restriction(wb("2"), named_function(id, lam("2"), Placement::Mixing), 6)));
}

TEST_CASE("coboundaries")
{
	CHECK(coboundary_component(wa("1"), 6, Component::Mix).dim() == 0);
	SubspaceBasis b2 = coboundary_component(wb("2"), 6, Component::Mix);
	REQUIRE(b2.dim() == 1);
	NamedCocycle eta2 = named_function(CocycleId::EtaLambda, lam("2"), Placement::Mixing);
	CHECK(cocycle_function(eta2, 2) == Rational(14));
	CHECK(in_span(b2, restrict_to(restrict_named(wb("2"), eta2, 6), b2.vars())));
	SubspaceBasis binf = coboundary_component(wb("inf"), 6, Component::Mix);
	CHECK(in_span(binf, function_vector(binf.vars(), [](int n) { return Rational(n + n * n); })));
	// η_λ = (λ+1)γ₁ + λγ₂
	auto g1 = named_function(CocycleId::Gamma1, lam("2"), Placement::Mixing);
	auto g2 = named_function(CocycleId::Gamma2, lam("2"), Placement::Mixing);
	for (int n = -5; n <= 5; ++n)
		CHECK(cocycle_function(eta2, n) == Rational(3) * cocycle_function(g1, n) + Rational(2) * cocycle_function(g2, n));
	SubspaceBasis vir = coboundary_component(wa("0"), 6, Component::Vir);
	CHECK(in_span(vir, function_vector(vir.vars(), [](int n) { return Rational(n); })));

	for (auto spec : {wa("0"), wa("inf"), wb("0"), wb("-1"), wab(0, 1), wab(Rational(1, 2), 0), wab(3, 4)})
	{
		SubspaceBasis z = kernel(constraints_h2_full(spec, 6));
		SubspaceBasis cob = coboundary_space_h2(spec, 6);
		for (const auto &c : cob.vectors())
			CHECK_MESSAGE(in_span(z, c), spec.name());
	}
}

TEST_CASE("named cocycle values")
{
	CHECK(eval_named(named_cocycle(CocycleId::OmegaVir), Lb(2), Lb(-2)) == Rational(1, 2));
	CHECK(eval_named(named_cocycle(CocycleId::OmegaVir), Lb(2), Lb(-1)) == Rational(0));
	CHECK(eval_named(named_cocycle(CocycleId::OmegaMixA, lam("3")), Lb(0), Xb(0)) == Rational(4));
	CHECK(eval_named(named_cocycle(CocycleId::OmegaMixA, lam("3")), Lb(2), Xb(-2)) == Rational(1));
	CHECK(eval_named(named_cocycle(CocycleId::OmegaMixA, lam("inf")), Lb(0), Xb(0)) == Rational(1));
	CHECK(eval_named(named_cocycle(CocycleId::OmegaAbB), Xb(3), Xb(-3)) == Rational(3));
	CHECK(eval_named(named_cocycle(CocycleId::OmegaAbB), Xb(-3), Xb(3)) == Rational(-3));
	CHECK(eval_named(named_cocycle(CocycleId::OmegaMixB, lam("0")), Lb(3), Xb(-3)) == Rational(9));
	CHECK(eval_named(named_cocycle(CocycleId::OmegaMixB, lam("2")), Lb(3), Xb(-3)) == Rational(3));
	CHECK(eval_named(named_cocycle(CocycleId::Omega0A), Xb(-3), Lb(3)) == Rational(-3));
	// closed form has no window
	CHECK(eval_named(named_cocycle(CocycleId::OmegaVir), Lb(1000), Lb(-1000)) == Rational(1000L * 999999L / 12));
	CHECK_THROWS_AS(eval_named(named_cocycle(CocycleId::OmegaVir), Lb(1), Xb(-1)), Error);
	CHECK_THROWS_AS(eval_named(named_cocycle(CocycleId::OmegaAbB), Lb(1), Lb(-1)), Error);
	CHECK(eval_named_total(named_cocycle(CocycleId::OmegaAbB), Lb(1), Lb(-1)) == Rational(0));
}

TEST_CASE("named cocycles are cocycles on their home algebras, N = 10")
{
	for (const char *l : {"0", "-1", "1", "5/7", "7", "inf"})
	{
		CHECK(is_cocycle(wa(l), named_cocycle(CocycleId::OmegaVir), 10).empty());
		CHECK(is_cocycle(wa(l), named_cocycle(CocycleId::OmegaMixA, lam(l)), 10).empty());
		CHECK(is_cocycle(wb(l), named_cocycle(CocycleId::OmegaAbB, lam(l)), 10).empty());
		CHECK(is_cocycle(wb(l), named_cocycle(CocycleId::OmegaMixB, lam(l)), 10).empty());
		for (CocycleId id : {CocycleId::Gamma1, CocycleId::Gamma2, CocycleId::EtaLambda})
			CHECK(is_cocycle(wb(l), named_function(id, lam(l), Placement::Mixing), 10).empty());
	}
	CHECK(is_cocycle(wa("0"), named_cocycle(CocycleId::Omega0A), 10).empty());
	CHECK(is_cocycle(wb("1"), named_function(CocycleId::Iota, lam("1"), Placement::Mixing), 4).empty());
	CHECK(is_cocycle(wb("1"), named_function(CocycleId::Iota, lam("1"), Placement::Abelian), 10).empty());
	CHECK(is_cocycle(AlgebraSpec::witt(), named_cocycle(CocycleId::OmegaVir), 10).empty());
}

TEST_CASE("non-cocycles are caught")
{
	// ι as a mixing cochain fails on W_A(1); Ω⁰_A only closes at λ = 0
	CHECK_FALSE(is_cocycle(wa("1"), named_function(CocycleId::Iota, lam("1"), Placement::Mixing), 6).empty());
	CHECK_FALSE(is_cocycle(wa("1"), named_cocycle(CocycleId::Omega0A), 6).empty());
	CHECK_FALSE(is_cocycle(AlgebraSpec::witt(), named_function(CocycleId::Gamma2, lam("0"), Placement::Virasoro), 6)
	                .empty());
	CHECK_THROWS_AS(is_cocycle(wa("1"), named_cocycle(CocycleId::OmegaAbB), 6), Error);
	CHECK_THROWS_AS(is_cocycle(AlgebraSpec::witt(), named_cocycle(CocycleId::OmegaMixA), 6), Error);
}

TEST_CASE("h2 dimensions")
{
	CHECK(h2_dimensions(wa("0"), 8) == H2Dims{1, 0, 2, 3});
	CHECK(h2_dimensions(wa("-1"), 8) == H2Dims{1, 0, 1, 2});
	CHECK(h2_dimensions(wb("inf"), 8) == H2Dims{1, 1, 1, 3});
	CHECK_THROWS_AS(h2_dimensions(wa("0"), 4), Error);
	CHECK_THROWS_AS(h2_dimensions(AlgebraSpec::witt(), 8), Error);
	try
	{
		h2_dimensions(wa("0"), 4);
	}
	catch (const Error &e)
	{
		CHECK(e.code() == ErrorCode::WindowTooSmall);
	}
}

TEST_CASE("h2 stabilises for N in [5, 10] and the direct solve agrees")
{
	for (auto spec : {wa("0"), wa("5/7"), wb("0"), wb("inf"), wab(0, 1), wab(Rational(1, 2), 1), wab(3, 4)})
	{
		H2Dims ref = h2_dimensions(spec, 5);
		for (int N = 6; N <= 10; ++N)
			CHECK_MESSAGE(h2_dimensions(spec, N) == ref, spec.name() << " N=" << N);
		CHECK(h2_total_direct(spec, 7) == ref.total);
	}
}

// Values frozen from the dense oracle in tests/oracle (N = 6); the live
// comparison below recomputes them.
TEST_CASE("h2 components match frozen oracle values")
{
	struct Row
	{
		AlgebraSpec spec;
		H2Dims dims;
	};
	std::vector<Row> rows{
	    {wa("0"), {1, 0, 2, 3}},          {wa("2"), {1, 0, 1, 2}},   {wa("inf"), {1, 0, 1, 2}},
	    {wb("0"), {1, 1, 1, 3}},          {wb("-1"), {1, 1, 1, 3}},  {wab(0, 0), {1, 1, 1, 3}},
	    {wab(0, 1), {1, 0, 2, 3}},        {wab(0, 2), {1, 0, 0, 1}}, {wab(0, -1), {1, 0, 1, 2}},
	    {wab(Rational(1, 2), 0), {1, 1, 0, 2}}, {wab(Rational(1, 2), 1), {1, 1, 0, 2}},
	    {wab(3, 4), {1, 0, 0, 1}},
	};
	for (const auto &r : rows)
		CHECK_MESSAGE(h2_dimensions(r.spec, 6) == r.dims, r.spec.name());
}

TEST_CASE("h2 components agree with the live oracle")
{
	using oracle::Q;
	std::vector<std::pair<AlgebraSpec, oracle::Alg>> cases{
	    {wa("0"), oracle::a_alg(0)},          {wa("5/7"), oracle::a_alg(Q(5, 7))},
	    {wa("inf"), oracle::a_inf()},         {wb("0"), oracle::b_alg(0)},
	    {wb("-1"), oracle::b_alg(-1)},        {wb("inf"), oracle::b_inf()},
	    {wab(0, 2), oracle::tensor(0, 2)},    {wab(Rational(1, 2), 0), oracle::tensor(Q(1, 2), 0)},
	    {wab(Rational(1, 3), 0), oracle::tensor(Q(1, 3), 0)}, {wab(-2, -1), oracle::tensor(-2, -1)},
	};
	for (const auto &[spec, g] : cases)
	{
		H2Dims d = h2_dimensions(spec, 6);
		CHECK_MESSAGE(d.vir == oracle::h2_dim(g, 6, 0), spec.name());
		CHECK_MESSAGE(d.mix == oracle::h2_dim(g, 6, 1), spec.name());
		CHECK_MESSAGE(d.ab == oracle::h2_dim(g, 6, 2), spec.name());
		CHECK_MESSAGE(d.total == oracle::h2_dim(g, 6), spec.name());
	}
}

TEST_CASE("weight-zero bookkeeping")
{
	CHECK(weight_zero_basis(wab(3, 4), 5) == std::vector<BasisVector>{Lb(0), Xb(-3)});
	CHECK(weight_zero_basis(wab(Rational(1, 2), 0), 5) == std::vector<BasisVector>{Lb(0)});
	CHECK(weight_zero_basis(wab(7, 0), 5) == std::vector<BasisVector>{Lb(0)});
	CHECK(partner_degree(wab(3, 4), Lb(2), Family::M) == std::optional<int>(-5));
	CHECK(partner_degree(wab(Rational(1, 2), 0), Xb(2), Family::M) == std::optional<int>(-3));
	CHECK_FALSE(partner_degree(wab(Rational(1, 2), 0), Lb(2), Family::M).has_value());
	auto ref = cochain_var(wb("1"), Xb(-2), Xb(2), 5);
	REQUIRE(ref);
	CHECK(ref->var == VarIndex{VarTag::Ab, 2});
	CHECK(ref->sign == -1);
	CHECK_FALSE(cochain_var(wb("1"), Xb(2), Xb(2), 5));
}
