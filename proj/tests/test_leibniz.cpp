#include "witt/leibniz.hpp"

#include "oracle/dense_oracle.hpp"

#include <doctest.h>

using namespace witt;

namespace {

LambdaParam lam(const char *s) { return parse_lambda(s); }
AlgebraSpec wa(const char *s) { return AlgebraSpec::semidirect_a(lam(s)); }
AlgebraSpec wb(const char *s) { return AlgebraSpec::semidirect_b(lam(s)); }
AlgebraSpec wab(Rational a, Rational b) { return AlgebraSpec::tensor_density(a, b); }

} // namespace

TEST_CASE("invariant forms")
{
	for (const char *l : {"0", "-1", "1", "5/7", "inf"})
	{
		CHECK_MESSAGE(inv_dimension(wa(l), 6) == 1, l);
		CHECK_MESSAGE(inv_dimension(wb(l), 6) == 0, l);
		SubspaceBasis k = kernel(constraints_invariant_form(wa(l), 6));
		CHECK(in_span(k, theta_a_vector()));
	}
	CHECK(inv_dimension(wab(0, 1), 6) == 1);
	CHECK(inv_dimension(wab(0, 2), 6) == 1);
	CHECK(inv_dimension(wab(0, 0), 6) == 0);
	CHECK(inv_dimension(wab(Rational(1, 2), 0), 6) == 0);
	CHECK_THROWS_AS(inv_dimension(AlgebraSpec::witt(), 6), Error);
}

TEST_CASE("theta_A is invariant and vanishes off (A_0, A_0)")
{
	AlgebraSpec a = wa("5/7");
	auto theta = [](const BasisVector &x, const BasisVector &y) {
		return x == Xb(0) && y == Xb(0) ? Rational(1) : Rational(0);
	};
	auto pair = [&](const BasisVector &x, const Element &e) {
		Rational s;
		for (const auto &[b, c] : e)
			s += c * theta(x, b);
		return s;
	};
	for (const auto &x : basis_window(a, 5))
		for (const auto &y : basis_window(a, 5))
			for (const auto &z : basis_window(a, 5))
			{
				Element xy = bracket_basis(a, x, y);
				Rational lhs;
				for (const auto &[b, c] : xy)
					lhs += c * theta(b, z);
				CHECK(lhs == pair(x, bracket_basis(a, y, z)));
			}
	// θ(L_n, L_m) = 0 for every invariant form: no sLL variable survives
	SubspaceBasis forms = kernel(constraints_invariant_form(a, 6));
	for (const auto &vec : forms.vectors())
		for (const auto &[k, c] : vec)
			CHECK(k.tag != VarTag::SLL);
}

TEST_CASE("Lie cocycles are Leibniz cocycles")
{
	for (auto spec : {wa("0"), wa("2"), wb("0"), wb("inf"), wab(0, 1), wab(Rational(1, 2), 1)})
	{
		LinearSystem leib = constraints_leibniz(spec, 6);
		SubspaceBasis lie = kernel(constraints_h2_full(spec, 6));
		for (const auto &z : lie.vectors())
		{
			SparseVec chi = lie_to_leibniz(spec, z, 6);
			for (const auto &row : leib.rows())
				CHECK_MESSAGE(dot(row, chi).is_zero(), spec.name());
		}
		// Leibniz coboundaries are Leibniz cocycles
		SubspaceBasis k = kernel(leib);
		SubspaceBasis cob = leibniz_coboundaries(spec, 6);
		for (const auto &c : cob.vectors())
			CHECK(in_span(k, c));
		// symmetrising a Lie cocycle gives 0
		for (const auto &z : lie.vectors())
			CHECK(symmetrize(spec, lie_to_leibniz(spec, z, 6), 6).empty());
	}
}

TEST_CASE("HL2 and the exact sequence")
{
	struct Row
	{
		AlgebraSpec spec;
		int h2, hl2, inv;
	};
	std::vector<Row> rows{
	    {wa("0"), 3, 4, 1},   {wa("-1"), 2, 3, 1},  {wa("5/7"), 2, 3, 1},   {wa("inf"), 2, 3, 1},
	    {wb("0"), 3, 3, 0},   {wb("1"), 3, 3, 0},   {wb("inf"), 3, 3, 0},   {wab(0, 0), 3, 3, 0},
	    {wab(0, 1), 3, 4, 1}, {wab(0, 2), 1, 2, 1}, {wab(0, -1), 2, 2, 0},  {wab(Rational(1, 2), 0), 2, 2, 0},
	    {wab(3, 4), 1, 1, 0},
	};
	for (const auto &r : rows)
	{
		ExactSequenceReport es = exact_sequence_report(r.spec, 7);
		CHECK_MESSAGE(es.h2 == r.h2, r.spec.name());
		CHECK_MESSAGE(es.hl2 == r.hl2, r.spec.name());
		CHECK_MESSAGE(es.inv == r.inv, r.spec.name());
		CHECK_MESSAGE(es.ok, r.spec.name());
		CHECK(es.images_invariant);
		CHECK(es.image_rank == es.hl2 - es.h2);
	}
	CHECK_THROWS_AS(hl2_dimension(wa("0"), 4), Error);
}

TEST_CASE("HL2 stabilises for N in [5, 9]")
{
	for (auto spec : {wa("0"), wb("0"), wab(0, 1), wab(3, 4)})
	{
		int ref = hl2_dimension(spec, 5);
		for (int N = 6; N <= 9; ++N)
			CHECK_MESSAGE(hl2_dimension(spec, N) == ref, spec.name() << " N=" << N);
	}
}

TEST_CASE("HL2 and Inv agree with the live oracle")
{
	using oracle::Q;
	std::vector<std::pair<AlgebraSpec, oracle::Alg>> cases{
	    {wa("0"), oracle::a_alg(0)},       {wa("5/7"), oracle::a_alg(Q(5, 7))}, {wa("inf"), oracle::a_inf()},
	    {wb("0"), oracle::b_alg(0)},       {wb("inf"), oracle::b_inf()},        {wab(0, 1), oracle::tensor(0, 1)},
	    {wab(0, -1), oracle::tensor(0, -1)}, {wab(Rational(1, 2), 1), oracle::tensor(Q(1, 2), 1)},
	};
	for (const auto &[spec, g] : cases)
	{
		CHECK_MESSAGE(hl2_dimension(spec, 6) == oracle::hl2_dim(g, 6), spec.name());
		CHECK_MESSAGE(inv_dimension(spec, 6) == oracle::inv_dim(g, 6), spec.name());
	}
}

TEST_CASE("variable bookkeeping")
{
	AlgebraSpec b = wb("1");
	auto v = leibniz_var(b, Xb(2), Lb(-2), 5);
	REQUIRE(v);
	CHECK(*v == VarIndex{VarTag::XL, 2});
	CHECK(leibniz_pair(b, *v) == std::pair{Xb(2), Lb(-2)});
	CHECK(inv_var(b, Xb(2), Lb(-2), 5) == inv_var(b, Lb(-2), Xb(2), 5));
	CHECK_FALSE(leibniz_var(b, Xb(2), Lb(-1), 5));
	CHECK_FALSE(leibniz_var(b, Xb(6), Lb(-6), 5));
	for (const auto &k : leibniz_vars(b, 5))
	{
		auto [x, y] = leibniz_pair(b, k);
		CHECK(leibniz_var(b, x, y, 5) == std::optional<VarIndex>(k));
	}
	for (const auto &k : inv_vars(b, 5))
	{
		auto [x, y] = inv_pair(b, k);
		CHECK(inv_var(b, x, y, 5) == std::optional<VarIndex>(k));
	}
}
