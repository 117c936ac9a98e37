#include "witt/leibniz.hpp"

#include <algorithm>
#include <map>

namespace witt {

namespace {

void require_module(const AlgebraSpec &spec)
{
	if (spec.kind() == Kind::Extended)
		throw Error(ErrorCode::ExtendedNotSupported, spec.name());
	if (!spec.has_module())
		throw Error(ErrorCode::NoModuleFamily, spec.name());
}

bool weight_zero_pair(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y, int N)
{
	if (x.family == Family::C || y.family == Family::C)
		return false;
	if (!in_window(x.degree, N) || !in_window(y.degree, N))
		return false;
	return (spec.weight(x) + spec.weight(y)).is_zero();
}

BasisVector make(Family f, int n) { return f == Family::L ? Lb(n) : Xb(n); }

// Ordered triples (x, y, z) with weights summing to zero and all pairwise brackets inside the window.
template <class F> void for_each_ordered_triple(const AlgebraSpec &spec, int N, F &&f)
{
	std::vector<BasisVector> basis = basis_window(spec, N);
	std::map<Rational, std::vector<BasisVector>> by_weight;
	for (const auto &b : basis)
		by_weight[spec.weight(b)].push_back(b);
	for (const auto &x : basis)
		for (const auto &y : basis)
		{
			auto it = by_weight.find(-(spec.weight(x) + spec.weight(y)));
			if (it == by_weight.end())
				continue;
			for (const auto &z : it->second)
			{
				if (!in_window(x.degree + y.degree, N) || !in_window(y.degree + z.degree, N) ||
				    !in_window(x.degree + z.degree, N))
					continue;
				f(x, y, z);
			}
		}
}

template <class VarFn> void add_left(VarFn var, const Element &e, const BasisVector &z, const Rational &s, SparseVec &row)
{
	for (const auto &[b, c] : e)
		if (auto v = var(b, z))
			axpy(row, s * c, SparseVec{{*v, Rational(1)}});
}

template <class VarFn> void add_right(VarFn var, const BasisVector &x, const Element &e, const Rational &s, SparseVec &row)
{
	for (const auto &[b, c] : e)
		if (auto v = var(x, b))
			axpy(row, s * c, SparseVec{{*v, Rational(1)}});
}

Rational lookup(const SparseVec &v, const std::optional<VarIndex> &k)
{
	if (!k)
		return Rational(0);
	auto it = v.find(*k);
	return it == v.end() ? Rational(0) : it->second;
}

} // namespace

std::optional<VarIndex> leibniz_var(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y, int N)
{
	if (!weight_zero_pair(spec, x, y, N))
		return std::nullopt;
	VarTag t = x.family == Family::L ? (y.family == Family::L ? VarTag::LL : VarTag::LX)
	                                 : (y.family == Family::L ? VarTag::XL : VarTag::XX);
	return VarIndex{t, x.degree};
}

std::pair<BasisVector, BasisVector> leibniz_pair(const AlgebraSpec &spec, const VarIndex &v)
{
	Family fx, fy;
	switch (v.tag)
	{
	case VarTag::LL: fx = Family::L, fy = Family::L; break;
	case VarTag::LX: fx = Family::L, fy = Family::M; break;
	case VarTag::XL: fx = Family::M, fy = Family::L; break;
	case VarTag::XX: fx = Family::M, fy = Family::M; break;
	default: throw Error(ErrorCode::DomainMismatch, "not a Leibniz variable: " + var_name(v));
	}
	BasisVector x = make(fx, v.n);
	return {x, make(fy, *partner_degree(spec, x, fy))};
}

std::set<VarIndex> leibniz_vars(const AlgebraSpec &spec, int N)
{
	std::set<VarIndex> out;
	for (Family fx : {Family::L, Family::M})
		for (Family fy : {Family::L, Family::M})
			for (int n = -N; n <= N; ++n)
			{
				BasisVector x = make(fx, n);
				if (auto m = partner_degree(spec, x, fy); m && in_window(*m, N))
					out.insert(*leibniz_var(spec, x, make(fy, *m), N));
			}
	return out;
}

std::optional<VarIndex> inv_var(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y, int N)
{
	if (!weight_zero_pair(spec, x, y, N))
		return std::nullopt;
	if (x.family == Family::L && y.family == Family::L)
		return VarIndex{VarTag::SLL, std::max(x.degree, y.degree)};
	if (x.family == Family::L)
		return VarIndex{VarTag::SLX, x.degree};
	if (y.family == Family::L)
		return VarIndex{VarTag::SLX, y.degree};
	return VarIndex{VarTag::SXX, std::max(x.degree, y.degree)};
}

std::pair<BasisVector, BasisVector> inv_pair(const AlgebraSpec &spec, const VarIndex &v)
{
	switch (v.tag)
	{
	case VarTag::SLL: return {Lb(v.n), Lb(-v.n)};
	case VarTag::SLX: return {Lb(v.n), Xb(*partner_degree(spec, Lb(v.n), Family::M))};
	case VarTag::SXX: return {Xb(v.n), Xb(*partner_degree(spec, Xb(v.n), Family::M))};
	default: throw Error(ErrorCode::DomainMismatch, "not an invariant-form variable: " + var_name(v));
	}
}

std::set<VarIndex> inv_vars(const AlgebraSpec &spec, int N)
{
	std::set<VarIndex> out;
	for (Family fx : {Family::L, Family::M})
		for (Family fy : {Family::L, Family::M})
			for (int n = -N; n <= N; ++n)
			{
				BasisVector x = make(fx, n);
				if (auto m = partner_degree(spec, x, fy); m && in_window(*m, N))
					out.insert(*inv_var(spec, x, make(fy, *m), N));
			}
	return out;
}

LinearSystem constraints_invariant_form(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	LinearSystem sys;
	for (const auto &v : inv_vars(spec, N))
		sys.add_var(v);
	auto var = [&](const BasisVector &x, const BasisVector &y) { return inv_var(spec, x, y, N); };
	for_each_ordered_triple(spec, N, [&](const BasisVector &x, const BasisVector &y, const BasisVector &z) {
		SparseVec row;
		add_left(var, bracket_basis(spec, x, y), z, Rational(1), row);
		add_right(var, x, bracket_basis(spec, y, z), Rational(-1), row);
		sys.add_row(row);
	});
	return sys;
}

LinearSystem constraints_leibniz(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	LinearSystem sys;
	for (const auto &v : leibniz_vars(spec, N))
		sys.add_var(v);
	auto var = [&](const BasisVector &x, const BasisVector &y) { return leibniz_var(spec, x, y, N); };
	for_each_ordered_triple(spec, N, [&](const BasisVector &x, const BasisVector &y, const BasisVector &z) {
		SparseVec row;
		add_left(var, bracket_basis(spec, x, y), z, Rational(1), row);
		add_right(var, x, bracket_basis(spec, y, z), Rational(-1), row);
		add_left(var, bracket_basis(spec, x, z), y, Rational(-1), row);
		sys.add_row(row);
	});
	return sys;
}

SubspaceBasis leibniz_coboundaries(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	std::set<VarIndex> vars = leibniz_vars(spec, N);
	std::vector<SparseVec> vecs;
	for (const auto &e : weight_zero_basis(spec, N))
	{
		SparseVec v;
		for (const auto &k : vars)
		{
			auto [x, y] = leibniz_pair(spec, k);
			Rational val = -bracket_basis(spec, x, y).coeff(e);
			if (!val.is_zero())
				v.emplace(k, val);
		}
		vecs.push_back(std::move(v));
	}
	return SubspaceBasis::span(vars, vecs);
}

int hl2_dimension(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	if (N < kMinWindowHL2)
		throw Error(ErrorCode::WindowTooSmall, "HL2 needs N >= " + std::to_string(kMinWindowHL2));
	return quotient_dim(kernel(constraints_leibniz(spec, N)), leibniz_coboundaries(spec, N));
}

int inv_dimension(const AlgebraSpec &spec, int N)
{
	return static_cast<int>(kernel(constraints_invariant_form(spec, N)).dim());
}

SparseVec theta_a_vector() { return {{VarIndex{VarTag::SXX, 0}, Rational(1)}}; }

SparseVec lie_to_leibniz(const AlgebraSpec &spec, const SparseVec &lie, int N)
{
	SparseVec out;
	for (const auto &k : leibniz_vars(spec, N))
	{
		auto [x, y] = leibniz_pair(spec, k);
		Rational val = eval_cochain(spec, lie, x, y, N);
		if (!val.is_zero())
			out.emplace(k, val);
	}
	return out;
}

SparseVec symmetrize(const AlgebraSpec &spec, const SparseVec &chi, int N)
{
	SparseVec out;
	for (const auto &k : inv_vars(spec, N))
	{
		auto [x, y] = inv_pair(spec, k);
		Rational val = lookup(chi, leibniz_var(spec, x, y, N)) + lookup(chi, leibniz_var(spec, y, x, N));
		if (!val.is_zero())
			out.emplace(k, val);
	}
	return out;
}

ExactSequenceReport exact_sequence_report(const AlgebraSpec &spec, int N)
{
	ExactSequenceReport r;
	r.h2 = h2_dimensions(spec, N).total;
	r.hl2 = hl2_dimension(spec, N);
	SubspaceBasis inv = kernel(constraints_invariant_form(spec, N));
	r.inv = static_cast<int>(inv.dim());
	std::vector<SparseVec> images;
	r.images_invariant = true;
	SubspaceBasis cocycles = kernel(constraints_leibniz(spec, N));
	for (const auto &chi : cocycles.vectors())
	{
		SparseVec s = symmetrize(spec, chi, N);
		if (!in_span(inv, s))
			r.images_invariant = false;
		images.push_back(std::move(s));
	}
	r.image_rank = static_cast<int>(SubspaceBasis::span(inv_vars(spec, N), images).dim());
	r.ok = r.images_invariant && r.hl2 - r.h2 <= r.inv && r.image_rank == r.hl2 - r.h2;
	return r;
}

bool exact_sequence_crosscheck(const AlgebraSpec &spec, int N) { return exact_sequence_report(spec, N).ok; }

} // namespace witt
