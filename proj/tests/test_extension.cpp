#include "witt/extension.hpp"

#include <doctest.h>

#include <random>

using namespace witt;

namespace {

LambdaParam lam(const char *s) { return parse_lambda(s); }
AlgebraSpec wa(const char *s) { return AlgebraSpec::semidirect_a(lam(s)); }
AlgebraSpec wb(const char *s) { return AlgebraSpec::semidirect_b(lam(s)); }

AlgebraSpec window_extension(const AlgebraSpec &base, const SparseVec &v, int N)
{
	return build_central_extension(base, {{WindowCochain{v, N, "w"}, "w", Rational(1)}});
}

} // namespace

TEST_CASE("bracket examples")
{
	Element vir = bracket_basis(virasoro(), Lb(2), Lb(-2));
	Element expect(Lb(0), Rational(-4));
	expect.add(Cb("Vir"), Rational(1, 2));
	CHECK(vir == expect);
	CHECK(bracket_basis(vir_b(lam("1")), Xb(3), Xb(-3)) == Element(Cb("AbB"), Rational(3)));
	AlgebraSpec a3 = build_central_extension(wa("3"), {{named_cocycle(CocycleId::OmegaMixA, lam("3")), "c", 1}});
	CHECK(bracket_basis(a3, Lb(0), Xb(0)) == Element(Cb("c"), Rational(4)));
	// coefficients scale the attached term
	AlgebraSpec scaled = build_central_extension(AlgebraSpec::witt(), {{named_cocycle(CocycleId::OmegaVir), "z", 6}});
	CHECK(bracket_basis(scaled, Lb(2), Lb(-2)).coeff(Cb("z")) == Rational(3));
	// centrality
	CHECK(bracket_basis(virasoro(), Cb("Vir"), Lb(3)).is_zero());
	CHECK(virasoro().kind() == Kind::Extended);
	CHECK(virasoro().base().kind() == Kind::Witt);
}

TEST_CASE("standard extensions are Lie algebras, N = 8")
{
	CHECK(verify_extension(virasoro(), 8).empty());
	for (const char *l : {"0", "-1", "1", "5/7", "inf"})
	{
		CHECK_MESSAGE(verify_extension(vir_a(lam(l)), 8).empty(), l);
		CHECK_MESSAGE(verify_extension(vir_b(lam(l)), 8).empty(), l);
	}
}

TEST_CASE("a non-cocycle breaks Jacobi")
{
	auto defects = verify_extension(cubic_mixing_extension(wa("1")), 8);
	CHECK_FALSE(defects.empty());
	// Ω⁰_A only closes at λ = 0
	AlgebraSpec bad = build_central_extension(wa("1"), {{named_cocycle(CocycleId::Omega0A), "c", 1}});
	CHECK_FALSE(verify_extension(bad, 6).empty());
	AlgebraSpec good = build_central_extension(wa("0"), {{named_cocycle(CocycleId::Omega0A), "c", 1}});
	CHECK(verify_extension(good, 6).empty());
}

TEST_CASE("cocycle condition is equivalent to Jacobi on the extension")
{
	const int N = 5;
	std::mt19937_64 rng(7);
	std::uniform_int_distribution<long> num(-3, 3);
	for (auto base : {wa("0"), wa("2"), wb("0"), wb("inf"), AlgebraSpec::tensor_density(0, 1)})
	{
		LinearSystem sys = constraints_h2_full(base, N);
		SubspaceBasis k = kernel(sys);
		for (const auto &v : k.vectors())
			CHECK_MESSAGE(verify_extension(window_extension(base, v, N), N).empty(), base.name());
		// a random vector outside the kernel
		for (int t = 0; t < 3; ++t)
		{
			SparseVec v;
			for (const auto &var : sys.vars())
				if (long c = num(rng))
					v.emplace(var, Rational(c));
			if (in_span(k, v))
				continue;
			CHECK_MESSAGE(!verify_extension(window_extension(base, v, N), N).empty(), base.name());
		}
	}
}

TEST_CASE("extension by a coboundary splits")
{
	for (auto base : {wa("0"), wa("5/7"), wb("0"), wb("2"), AlgebraSpec::tensor_density(3, 4)})
		for (const auto &e : weight_zero_basis(base, 6))
			CHECK_MESSAGE(coboundary_trivialization(base, e, 6).empty(), base.name() << " " << format_basis(e));
}

TEST_CASE("selection errors")
{
	auto code_of = [](auto &&f) {
		try
		{
			f();
		}
		catch (const Error &e)
		{
			return e.code();
		}
		FAIL("no error");
		return ErrorCode::MalformedNumber;
	};
	NamedCocycle vir = named_cocycle(CocycleId::OmegaVir);
	CHECK(code_of([&] { build_central_extension(AlgebraSpec::witt(), {{vir, "c", 1}, {vir, "c", 2}}); }) ==
	      ErrorCode::DuplicateCentralName);
	CHECK(code_of([&] { build_central_extension(virasoro(), {{vir, "Vir", 1}}); }) == ErrorCode::DuplicateCentralName);
	CHECK(code_of([&] { build_central_extension(AlgebraSpec::witt(), {{vir, "", 1}}); }) ==
	      ErrorCode::DuplicateCentralName);
	CHECK(code_of([&] {
		      build_central_extension(wa("1"), {{named_cocycle(CocycleId::OmegaAbB), "c", 1}});
	      }) == ErrorCode::DomainMismatch);
	CHECK(code_of([&] {
		      build_central_extension(wa("1"), {{WindowCochain{{{VarIndex{VarTag::LL, 0}, 1}}, 4}, "c", 1}});
	      }) == ErrorCode::DomainMismatch);
	CHECK(code_of([&] { h2_dimensions(vir_a(lam("1")), 6); }) == ErrorCode::ExtendedNotSupported);
	// stacking onto an existing extension with a fresh name works
	AlgebraSpec twice = build_central_extension(virasoro(), {{vir, "Vir2", 1}});
	CHECK(twice.attached().size() == 2);
	CHECK(verify_extension(twice, 6).empty());
}
