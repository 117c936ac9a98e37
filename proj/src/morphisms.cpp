#include "witt/morphisms.hpp"

#include <map>

namespace witt {

namespace {

template <class F> Element map_linear(const Element &x, F &&f)
{
	Element r;
	for (const auto &[b, c] : x)
		r += c * f(b);
	return r;
}

// coefficient of φ^B at L_n: λ+1 at n = 0 for finite λ, 1 otherwise
Rational phi_b_weight(const LambdaParam &lam, int n)
{
	if (n == 0 && lam.is_finite())
		return lam.value() + Rational(1);
	return Rational(1);
}

bool flips_x0(const AlgebraSpec &spec) { return spec.lambda().is(-1); }

} // namespace

std::string format_aut(const AutSpec &s)
{
	std::string r = "(" + std::to_string(s.k) + ";" + s.a.str() + "," + s.b.str() + ";" + s.alpha.str() + "," +
	                s.xi.str();
	if (!s.inner.empty())
	{
		r += "|";
		for (std::size_t i = 0; i < s.inner.size(); ++i)
			r += (i ? "," : "") + std::to_string(s.inner[i].first) + ":" + s.inner[i].second.str();
	}
	return r + ")";
}

AutSpec normalize_aut(const AutSpec &s, const AlgebraSpec &spec)
{
	std::map<int, Rational> acc;
	for (const auto &[i, c] : s.inner)
		acc[i] += c;
	AutSpec out = s;
	out.k = ((s.k % 2) + 2) % 2;
	out.inner.clear();
	for (const auto &[i, c] : acc)
	{
		if (c.is_zero() || (spec.is_b() && i == 0))
			continue;
		out.inner.emplace_back(i, c);
	}
	return out;
}

void validate_aut(const AutSpec &s, const AlgebraSpec &spec)
{
	auto fail = [&](const std::string &why) {
		return Error(ErrorCode::InvalidAutForAlgebra, format_aut(s) + " on " + spec.name() + ": " + why);
	};
	if (spec.kind() != Kind::SemidirectA && spec.kind() != Kind::SemidirectB)
		throw fail("automorphisms are parameterised for W_A and W_B only");
	if (s.k != 0 && s.k != 1)
		throw fail("k must be 0 or 1");
	if (s.alpha.is_zero() || s.xi.is_zero())
		throw fail("alpha and xi must be nonzero");
	if (s.k == 1 && !(spec.lambda().is(0) || spec.lambda().is(-1)))
		throw fail("k = 1 needs lambda in {0, -1}");
	if (spec.is_b() && !spec.lambda().is(0) && !s.b.is_zero())
		throw fail("psi part needs lambda = 0 for W_B");
}

Element apply_aut(const AutSpec &s, const AlgebraSpec &spec, const Element &x)
{
	validate_aut(s, spec);
	const LambdaParam &lam = spec.lambda();
	Element y = x;
	// μ_ξ
	y = map_linear(y, [&](const BasisVector &e) {
		return e.family == Family::M ? Element(e, s.xi) : Element(e);
	});
	// σ_α
	y = map_linear(y, [&](const BasisVector &e) {
		return e.family == Family::C ? Element(e) : Element(e, s.alpha.pow(e.degree));
	});
	// ψ_b
	y = map_linear(y, [&](const BasisVector &e) {
		Element r(e);
		if (e.family == Family::L)
			r.add(Xb(e.degree), s.b * Rational(e.degree));
		return r;
	});
	// φ_a
	y = map_linear(y, [&](const BasisVector &e) {
		Element r(e);
		if (e.family != Family::L)
			return r;
		Rational n(e.degree);
		r.add(Xb(e.degree), s.a * (spec.is_a() ? n * n : phi_b_weight(lam, e.degree)));
		return r;
	});
	// τ_λ
	if (s.k == 1)
		y = map_linear(y, [&](const BasisVector &e) {
			switch (e.family)
			{
			case Family::L: return Element(Lb(-e.degree), Rational(-1));
			case Family::M: return Element(Xb(-e.degree), Rational(e.degree == 0 && flips_x0(spec) ? -1 : 1));
			default: return Element(e);
			}
		});
	// Π exp(c ad X_i) = 1 + Σ c ad X_i, since ad X_i ad X_j = 0
	Element shift;
	for (const auto &[i, c] : s.inner)
		shift += c * bracket(spec, Element(Xb(i)), y);
	return y + shift;
}

std::vector<PairDefect> check_aut(const AutSpec &s, const AlgebraSpec &spec, int N)
{
	validate_aut(s, spec);
	std::vector<BasisVector> basis = basis_window(spec, N);
	std::vector<Element> images;
	for (const auto &e : basis)
		images.push_back(apply_aut(s, spec, Element(e)));
	std::vector<PairDefect> out;
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j)
		{
			Element lhs = apply_aut(s, spec, bracket_basis(spec, basis[i], basis[j]));
			Element rhs = bracket(spec, images[i], images[j]);
			if (!(lhs == rhs))
				out.push_back({basis[i], basis[j], lhs, rhs});
		}
	return out;
}

AutSpec compose_auts(const AutSpec &s1, const AutSpec &s2, const AlgebraSpec &spec)
{
	validate_aut(s1, spec);
	validate_aut(s2, spec);
	int e1 = s1.k ? -1 : 1, e2 = s2.k ? -1 : 1;
	AutSpec r;
	r.k = (s1.k + s2.k) % 2;
	r.a = Rational(e2) * s1.a + s1.xi * s2.a;
	r.b = s1.b + s1.xi * s2.b;
	r.alpha = s1.alpha.pow(e2) * s2.alpha;
	r.xi = s1.xi * s2.xi;
	// Φ1 exp(z ad X_j) Φ1⁻¹ = exp(z α^j ξ ad X_{ε1 j}), with τ_{-1} negating X_0
	r.inner = s1.inner;
	for (const auto &[j, z] : s2.inner)
	{
		Rational sgn(s1.k == 1 && j == 0 && flips_x0(spec) ? -1 : 1);
		r.inner.emplace_back(e1 * j, sgn * s1.alpha.pow(j) * s1.xi * z);
	}
	return normalize_aut(r, spec);
}

AutSpec inverse_aut(const AutSpec &s, const AlgebraSpec &spec)
{
	validate_aut(s, spec);
	int e = s.k ? -1 : 1;
	AutSpec r;
	r.k = s.k;
	r.alpha = s.alpha.pow(-e);
	r.xi = Rational(1) / s.xi;
	r.a = -Rational(e) * s.a / s.xi;
	r.b = -s.b / s.xi;
	for (const auto &[i, y] : s.inner)
	{
		int j = e * i;
		Rational sgn(s.k == 1 && j == 0 && flips_x0(spec) ? -1 : 1);
		r.inner.emplace_back(j, -y / (sgn * s.alpha.pow(j) * s.xi));
	}
	return normalize_aut(r, spec);
}

bool inner_identity_check(const LambdaParam &lambda, int N, const Rational &a)
{
	AlgebraSpec spec = AlgebraSpec::semidirect_a(lambda);
	AutSpec inner;
	inner.inner = {{0, -a}};
	AutSpec outer;
	outer.a = lambda.is_infinite() ? a : lambda.value() * a;
	outer.b = lambda.is_infinite() ? a : (lambda.value() + Rational(1)) * a;
	for (const auto &e : basis_window(spec, N))
		if (!(apply_aut(inner, spec, Element(e)) == apply_aut(outer, spec, Element(e))))
			return false;
	return true;
}

bool inner_identity_check(const LambdaParam &lambda, int N)
{
	for (const Rational &a : {Rational(0), Rational(1), Rational(3), Rational(-2, 5)})
		if (!inner_identity_check(lambda, N, a))
			return false;
	return true;
}

std::string der_gen_name(DerGen g)
{
	switch (g)
	{
	case DerGen::AdInner: return "ad";
	case DerGen::DAb: return "d_Ab";
	case DerGen::DeltaA: return "delta_A";
	case DerGen::PartialA: return "partial_A";
	case DerGen::DB: return "d_B";
	case DerGen::PartialB0: return "partial_B0";
	}
	return "?";
}

DerSpec d_a_lambda(const LambdaParam &lambda)
{
	return DerSpec::of(lambda.is(0) ? DerGen::PartialA : DerGen::DeltaA);
}

void validate_der(const DerSpec &d, const AlgebraSpec &spec)
{
	for (const auto &t : d.terms)
	{
		bool ok = true;
		switch (t.gen)
		{
		case DerGen::AdInner:
			for (const auto &[b, c] : t.inner)
				ok = ok && spec.is_valid_symbol(b);
			break;
		case DerGen::DAb: ok = spec.has_module(); break;
		case DerGen::DeltaA:
		case DerGen::PartialA: ok = spec.is_a(); break;
		case DerGen::DB: ok = spec.is_b(); break;
		case DerGen::PartialB0: ok = spec.is_b() && spec.lambda().is(0); break;
		}
		if (!ok)
			throw Error(ErrorCode::InvalidDerForAlgebra, der_gen_name(t.gen) + " on " + spec.name());
	}
}

Element apply_der(const DerSpec &d, const AlgebraSpec &spec, const Element &x)
{
	validate_der(d, spec);
	Element r;
	for (const auto &t : d.terms)
	{
		if (t.gen == DerGen::AdInner)
		{
			r += t.coeff * bracket(spec, t.inner, x);
			continue;
		}
		r += t.coeff * map_linear(x, [&](const BasisVector &e) {
			Element img;
			Rational n(e.degree);
			if (e.family == Family::M && t.gen == DerGen::DAb)
				img.add(e, Rational(1));
			if (e.family != Family::L)
				return img;
			switch (t.gen)
			{
			case DerGen::DeltaA:
			case DerGen::PartialB0: img.add(Xb(e.degree), n); break;
			case DerGen::PartialA: img.add(Xb(e.degree), n * n); break;
			case DerGen::DB: img.add(Xb(e.degree), phi_b_weight(spec.lambda(), e.degree)); break;
			default: break;
			}
			return img;
		});
	}
	return r;
}

std::vector<PairDefect> check_der(const DerSpec &d, const AlgebraSpec &spec, int N)
{
	validate_der(d, spec);
	std::vector<BasisVector> basis = basis_window(spec, N);
	std::vector<PairDefect> out;
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j)
		{
			const auto &x = basis[i], &y = basis[j];
			Element lhs = apply_der(d, spec, bracket_basis(spec, x, y));
			Element rhs = bracket(spec, apply_der(d, spec, Element(x)), Element(y)) +
			              bracket(spec, Element(x), apply_der(d, spec, Element(y)));
			if (!(lhs == rhs))
				out.push_back({x, y, lhs, rhs});
		}
	return out;
}

std::vector<DerSpec> named_outer_derivations(const AlgebraSpec &spec)
{
	std::vector<DerSpec> out{DerSpec::of(DerGen::DAb)};
	if (spec.is_a())
		out.push_back(d_a_lambda(spec.lambda()));
	else if (spec.is_b())
	{
		out.push_back(DerSpec::of(DerGen::DB));
		if (spec.lambda().is(0))
			out.push_back(DerSpec::of(DerGen::PartialB0));
	}
	return out;
}

namespace {

VarTag der_tag(Family src, Family tgt)
{
	if (src == Family::L)
		return tgt == Family::L ? VarTag::DLL : VarTag::DLX;
	return tgt == Family::L ? VarTag::DXL : VarTag::DXX;
}

BasisVector make(Family f, int n) { return f == Family::L ? Lb(n) : Xb(n); }

using LinExpr = std::map<BasisVector, SparseVec>;

// D(e) in terms of the unknowns; nothing if some needed unknown lies outside the window
std::optional<LinExpr> d_expr(const AlgebraSpec &spec, const BasisVector &e, int N)
{
	if (!in_window(e.degree, N))
		return std::nullopt;
	LinExpr out;
	for (Family f : {Family::L, Family::M})
	{
		if (f == Family::M && !spec.has_module())
			continue;
		auto t = same_weight_degree(spec, e, f);
		if (!t)
			continue;
		if (!in_window(*t, N))
			return std::nullopt;
		out[make(f, *t)] = SparseVec{{VarIndex{der_tag(e.family, f), e.degree}, Rational(1)}};
	}
	return out;
}

void add_scaled(LinExpr &acc, const BasisVector &g, const Rational &c, const SparseVec &expr)
{
	axpy(acc[g], c, expr);
}

void require_module(const AlgebraSpec &spec)
{
	if (spec.kind() == Kind::Extended)
		throw Error(ErrorCode::ExtendedNotSupported, spec.name());
	if (!spec.has_module())
		throw Error(ErrorCode::NoModuleFamily, spec.name());
}

} // namespace

std::set<VarIndex> derivation_vars(const AlgebraSpec &spec, int N)
{
	// only sources whose every same-weight target fits in the window carry unknowns
	std::set<VarIndex> out;
	for (const auto &e : basis_window(spec, N))
		if (auto de = d_expr(spec, e, N))
			for (const auto &[tgt, expr] : *de)
				out.insert(expr.begin()->first);
	return out;
}

std::pair<BasisVector, BasisVector> derivation_pair(const AlgebraSpec &spec, const VarIndex &v)
{
	Family src, tgt;
	switch (v.tag)
	{
	case VarTag::DLL: src = Family::L, tgt = Family::L; break;
	case VarTag::DLX: src = Family::L, tgt = Family::M; break;
	case VarTag::DXL: src = Family::M, tgt = Family::L; break;
	case VarTag::DXX: src = Family::M, tgt = Family::M; break;
	default: throw Error(ErrorCode::DomainMismatch, "not a derivation variable: " + var_name(v));
	}
	BasisVector s = make(src, v.n);
	return {s, make(tgt, *same_weight_degree(spec, s, tgt))};
}

LinearSystem constraints_derivation(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	LinearSystem sys;
	for (const auto &v : derivation_vars(spec, N))
		sys.add_var(v);
	std::vector<BasisVector> basis = basis_window(spec, N);
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j)
		{
			const auto &x = basis[i], &y = basis[j];
			auto dx = d_expr(spec, x, N), dy = d_expr(spec, y, N);
			if (!dx || !dy)
				continue;
			LinExpr acc;
			bool admissible = true;
			// D([x, y])
			for (const auto &[e, c] : bracket_basis(spec, x, y))
			{
				auto de = d_expr(spec, e, N);
				if (!de)
				{
					admissible = false;
					break;
				}
				for (const auto &[g, expr] : *de)
					add_scaled(acc, g, c, expr);
			}
			if (!admissible)
				continue;
			// - [D x, y] - [x, D y]
			for (const auto &[f, expr] : *dx)
				for (const auto &[g, c] : bracket_basis(spec, f, y))
					add_scaled(acc, g, -c, expr);
			for (const auto &[f, expr] : *dy)
				for (const auto &[g, c] : bracket_basis(spec, x, f))
					add_scaled(acc, g, -c, expr);
			for (const auto &[g, row] : acc)
				sys.add_row(row);
		}
	return sys;
}

SubspaceBasis inner_derivations(const AlgebraSpec &spec, int N)
{
	std::set<VarIndex> vars = derivation_vars(spec, N);
	std::vector<SparseVec> vecs;
	for (const auto &e : weight_zero_basis(spec, N))
		vecs.push_back(derivation_vector(DerSpec::ad(Element(e)), spec, N));
	return SubspaceBasis::span(vars, vecs);
}

SparseVec derivation_vector(const DerSpec &d, const AlgebraSpec &spec, int N)
{
	SparseVec out;
	for (const auto &v : derivation_vars(spec, N))
	{
		auto [src, tgt] = derivation_pair(spec, v);
		Rational c = apply_der(d, spec, Element(src)).coeff(tgt);
		if (!c.is_zero())
			out.emplace(v, c);
	}
	return out;
}

int h1_adjoint_dimension(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	if (N < kMinWindowH1)
		throw Error(ErrorCode::WindowTooSmall, "H1 needs N >= " + std::to_string(kMinWindowH1));
	return quotient_dim(kernel(constraints_derivation(spec, N)), inner_derivations(spec, N));
}

AutSpec one_param_aut(OneParam f, const Rational &t)
{
	AutSpec s;
	switch (f)
	{
	case OneParam::Mu: s.xi = Rational(1) + t; break;
	case OneParam::PsiA:
	case OneParam::PsiB0: s.b = t; break;
	case OneParam::PhiA:
	case OneParam::PhiB: s.a = t; break;
	}
	return s;
}

DerSpec one_param_derivative(OneParam f, const AlgebraSpec &)
{
	switch (f)
	{
	case OneParam::Mu: return DerSpec::of(DerGen::DAb);
	case OneParam::PsiA: return DerSpec::of(DerGen::DeltaA);
	case OneParam::PhiA: return DerSpec::of(DerGen::PartialA);
	case OneParam::PhiB: return DerSpec::of(DerGen::DB);
	case OneParam::PsiB0: return DerSpec::of(DerGen::PartialB0);
	}
	return {};
}

Element t_coefficient(OneParam f, const AlgebraSpec &spec, const BasisVector &x, const Rational &t1,
                      const Rational &t2)
{
	Element d = apply_aut(one_param_aut(f, t1), spec, Element(x)) - apply_aut(one_param_aut(f, t2), spec, Element(x));
	return (Rational(1) / (t1 - t2)) * d;
}

bool differentiation_consistent(OneParam f, const AlgebraSpec &spec, int N)
{
	const Rational t1(1, 3), t2(-5, 2), t3(7);
	DerSpec d = one_param_derivative(f, spec);
	for (const auto &e : basis_window(spec, N))
	{
		Element slope = t_coefficient(f, spec, e, t1, t2);
		Element at_zero = apply_aut(one_param_aut(f, t1), spec, Element(e)) - t1 * slope;
		if (!(at_zero == Element(e)))
			return false;
		if (!(apply_aut(one_param_aut(f, t3), spec, Element(e)) == at_zero + t3 * slope))
			return false;
		if (!(slope == apply_der(d, spec, Element(e))))
			return false;
	}
	return true;
}

} // namespace witt
