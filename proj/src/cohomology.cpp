#include "witt/cohomology.hpp"

#include <algorithm>
#include <map>

namespace witt {

namespace {

Rational family_offset(const AlgebraSpec &spec, Family f)
{
	if (f == Family::M && spec.base_kind() == Kind::TensorDensity)
		return spec.a();
	return Rational(0);
}

std::optional<int> as_int(const Rational &q)
{
	if (!q.is_integer())
		return std::nullopt;
	return static_cast<int>(q.num().get_si());
}

void require_module(const AlgebraSpec &spec)
{
	if (spec.kind() == Kind::Extended)
		throw Error(ErrorCode::ExtendedNotSupported, spec.name());
	if (!spec.has_module())
		throw Error(ErrorCode::NoModuleFamily, spec.name());
}

int module_count(const BasisVector &x, const BasisVector &y, const BasisVector &z)
{
	return (x.family == Family::M) + (y.family == Family::M) + (z.family == Family::M);
}

Component component_of(int module_count)
{
	return module_count == 0 ? Component::Vir : module_count == 1 ? Component::Mix : Component::Ab;
}

// Ω(x, e) for a bracket result e = Σ c_i e_i, as a row contribution
void add_pairing(const AlgebraSpec &spec, const BasisVector &x, const Element &e, int N, SparseVec &row)
{
	for (const auto &[b, c] : e)
		if (auto ref = cochain_var(spec, x, b, N))
			axpy(row, c * Rational(ref->sign), SparseVec{{ref->var, Rational(1)}});
}

// Unordered triples x < y < z of the window whose weights sum to zero.
template <class F> void for_each_weight_zero_triple(const AlgebraSpec &spec, int N, F &&f)
{
	std::vector<BasisVector> basis = basis_window(spec, N);
	std::map<Rational, std::vector<std::size_t>> by_weight;
	for (std::size_t i = 0; i < basis.size(); ++i)
		by_weight[spec.weight(basis[i])].push_back(i);
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j)
		{
			Rational w = -(spec.weight(basis[i]) + spec.weight(basis[j]));
			auto it = by_weight.find(w);
			if (it == by_weight.end())
				continue;
			for (std::size_t k : it->second)
				if (k > j)
					f(basis[i], basis[j], basis[k]);
		}
}

bool brackets_in_window(const BasisVector &x, const BasisVector &y, const BasisVector &z, int N)
{
	return in_window(x.degree + y.degree, N) && in_window(y.degree + z.degree, N) &&
	       in_window(z.degree + x.degree, N);
}

} // namespace

std::optional<int> partner_degree(const AlgebraSpec &spec, const BasisVector &x, Family family_y)
{
	return as_int(-spec.weight(x) - family_offset(spec, family_y));
}

std::optional<int> same_weight_degree(const AlgebraSpec &spec, const BasisVector &x, Family family_t)
{
	return as_int(spec.weight(x) - family_offset(spec, family_t));
}

std::vector<BasisVector> weight_zero_basis(const AlgebraSpec &spec, int N)
{
	std::vector<BasisVector> out{Lb(0)};
	if (spec.has_module())
		if (auto t = as_int(-family_offset(spec, Family::M)); t && in_window(*t, N))
			out.push_back(Xb(*t));
	return out;
}

std::optional<VarRef> cochain_var(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y, int N)
{
	if (x.family == Family::C || y.family == Family::C || x == y)
		return std::nullopt;
	if (!in_window(x.degree, N) || !in_window(y.degree, N))
		return std::nullopt;
	if (!(spec.weight(x) + spec.weight(y)).is_zero())
		return std::nullopt;
	if (x.family == Family::L && y.family == Family::L)
		return x.degree > 0 ? VarRef{{VarTag::Vir, x.degree}, 1} : VarRef{{VarTag::Vir, -x.degree}, -1};
	if (x.family == Family::L)
		return VarRef{{VarTag::Mix, x.degree}, 1};
	if (y.family == Family::L)
		return VarRef{{VarTag::Mix, y.degree}, -1};
	int p = std::max(x.degree, y.degree);
	return VarRef{{VarTag::Ab, p}, x.degree == p ? 1 : -1};
}

std::pair<BasisVector, BasisVector> cochain_pair(const AlgebraSpec &spec, const VarIndex &v)
{
	switch (v.tag)
	{
	case VarTag::Vir: return {Lb(v.n), Lb(-v.n)};
	case VarTag::Ab: return {Xb(v.n), Xb(*partner_degree(spec, Xb(v.n), Family::M))};
	case VarTag::Mix: return {Lb(v.n), Xb(*partner_degree(spec, Lb(v.n), Family::M))};
	default: throw Error(ErrorCode::DomainMismatch, "not a 2-cochain variable: " + var_name(v));
	}
}

std::set<VarIndex> cochain_vars(const AlgebraSpec &spec, int N, Component c)
{
	std::set<VarIndex> vars;
	for (int n = -N; n <= N; ++n)
	{
		switch (c)
		{
		case Component::Vir:
			if (n >= 1)
				vars.insert({VarTag::Vir, n});
			break;
		case Component::Ab:
			if (!spec.has_module())
				break;
			if (auto m = partner_degree(spec, Xb(n), Family::M); m && in_window(*m, N) && n > *m)
				vars.insert({VarTag::Ab, n});
			break;
		case Component::Mix:
			if (!spec.has_module())
				break;
			if (auto m = partner_degree(spec, Lb(n), Family::M); m && in_window(*m, N))
				vars.insert({VarTag::Mix, n});
			break;
		}
	}
	return vars;
}

Rational eval_cochain(const AlgebraSpec &spec, const SparseVec &values, const BasisVector &x, const BasisVector &y,
                      int N)
{
	auto ref = cochain_var(spec, x, y, N);
	if (!ref)
		return Rational(0);
	auto it = values.find(ref->var);
	return it == values.end() ? Rational(0) : it->second * Rational(ref->sign);
}

LinearSystem constraints_component(const AlgebraSpec &spec, int N, Component c)
{
	LinearSystem sys;
	for (const auto &v : cochain_vars(spec, N, c))
		sys.add_var(v);
	for_each_weight_zero_triple(spec, N, [&](const BasisVector &x, const BasisVector &y, const BasisVector &z) {
		if (component_of(module_count(x, y, z)) != c || module_count(x, y, z) == 3)
			return;
		if (!brackets_in_window(x, y, z, N))
			return;
		SparseVec row;
		add_pairing(spec, x, bracket_basis(spec, y, z), N, row);
		add_pairing(spec, y, bracket_basis(spec, z, x), N, row);
		add_pairing(spec, z, bracket_basis(spec, x, y), N, row);
		sys.add_row(row);
	});
	return sys;
}

LinearSystem constraints_virasoro(int N)
{
	if (N < 3)
		throw Error(ErrorCode::WindowTooSmall, "Virasoro constraints need N >= 3");
	return constraints_component(AlgebraSpec::witt(), N, Component::Vir);
}

LinearSystem constraints_abelian(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	return constraints_component(spec, N, Component::Ab);
}

LinearSystem constraints_mixing(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	return constraints_component(spec, N, Component::Mix);
}

LinearSystem constraints_h2_full(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	LinearSystem sys;
	for (Component c : {Component::Vir, Component::Ab, Component::Mix})
	{
		LinearSystem part = constraints_component(spec, N, c);
		for (const auto &v : part.vars())
			sys.add_var(v);
		for (const auto &r : part.rows())
			sys.add_row(r);
	}
	return sys;
}

SparseVec coboundary_vector(const AlgebraSpec &spec, const BasisVector &e, int N)
{
	SparseVec out;
	for (Component c : {Component::Vir, Component::Ab, Component::Mix})
		for (const auto &v : cochain_vars(spec, N, c))
		{
			auto [x, y] = cochain_pair(spec, v);
			Rational val = -bracket_basis(spec, x, y).coeff(e);
			if (!val.is_zero())
				out.emplace(v, val);
		}
	return out;
}

SubspaceBasis coboundary_space_h2(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	std::set<VarIndex> vars;
	for (Component c : {Component::Vir, Component::Ab, Component::Mix})
		for (const auto &v : cochain_vars(spec, N, c))
			vars.insert(v);
	std::vector<SparseVec> vecs;
	for (const auto &e : weight_zero_basis(spec, N))
		vecs.push_back(coboundary_vector(spec, e, N));
	return SubspaceBasis::span(vars, vecs);
}

SubspaceBasis coboundary_component(const AlgebraSpec &spec, int N, Component c)
{
	std::set<VarIndex> vars = cochain_vars(spec, N, c);
	std::vector<SparseVec> vecs;
	for (const auto &e : weight_zero_basis(spec, N))
	{
		SparseVec proj;
		for (const auto &[k, v] : coboundary_vector(spec, e, N))
			if (vars.count(k))
				proj.emplace(k, v);
		vecs.push_back(std::move(proj));
	}
	return SubspaceBasis::span(vars, vecs);
}

H2Dims h2_dimensions(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	if (N < kMinWindowH2)
		throw Error(ErrorCode::WindowTooSmall, "H2 needs N >= " + std::to_string(kMinWindowH2));
	H2Dims d;
	auto comp = [&](Component c) {
		return quotient_dim(kernel(constraints_component(spec, N, c)), coboundary_component(spec, N, c));
	};
	d.vir = comp(Component::Vir);
	d.ab = comp(Component::Ab);
	d.mix = comp(Component::Mix);
	d.total = d.vir + d.ab + d.mix;
	return d;
}

int h2_total_direct(const AlgebraSpec &spec, int N)
{
	require_module(spec);
	return quotient_dim(kernel(constraints_h2_full(spec, N)), coboundary_space_h2(spec, N));
}

NamedCocycle named_cocycle(CocycleId id, const LambdaParam &lambda)
{
	Placement p = Placement::Mixing;
	switch (id)
	{
	case CocycleId::OmegaVir: p = Placement::Virasoro; break;
	case CocycleId::OmegaAbB:
	case CocycleId::Iota: p = Placement::Abelian; break;
	default: break;
	}
	return {id, lambda, p};
}

NamedCocycle named_function(CocycleId id, const LambdaParam &lambda, Placement placement)
{
	return {id, lambda, placement};
}

std::string cocycle_label(const NamedCocycle &c)
{
	std::string base;
	switch (c.id)
	{
	case CocycleId::OmegaVir: return "Omega_Vir";
	case CocycleId::Omega0A: return "Omega0_A";
	case CocycleId::OmegaMixA: return "OmegaMix_A(" + c.lambda.str() + ")";
	case CocycleId::OmegaAbB: return "OmegaAb_B";
	case CocycleId::OmegaMixB: return "OmegaMix_B(" + c.lambda.str() + ")";
	case CocycleId::Iota: base = "iota"; break;
	case CocycleId::BetaLambda: base = "beta_" + c.lambda.str(); break;
	case CocycleId::Gamma1: base = "gamma1"; break;
	case CocycleId::Gamma2: base = "gamma2"; break;
	case CocycleId::EtaLambda: base = "eta_" + c.lambda.str(); break;
	}
	return base + (c.placement == Placement::Abelian ? "/ab" : c.placement == Placement::Mixing ? "/mix" : "/vir");
}

Rational cocycle_function(const NamedCocycle &c, int n)
{
	const LambdaParam &lam = c.lambda;
	Rational q(n);
	switch (c.id)
	{
	case CocycleId::OmegaVir: return q * (q * q - Rational(1)) / Rational(12);
	case CocycleId::Omega0A:
	case CocycleId::OmegaAbB:
	case CocycleId::Iota:
	case CocycleId::Gamma1: return q;
	case CocycleId::Gamma2: return q * q;
	case CocycleId::OmegaMixA:
	case CocycleId::BetaLambda:
		if (lam.is_infinite() || n != 0)
			return Rational(1);
		return lam.value() + Rational(1);
	case CocycleId::OmegaMixB: return lam.is(0) ? q * q : q;
	case CocycleId::EtaLambda:
		return lam.is_infinite() ? q + q * q : q + q * Rational(n + 1) * lam.value();
	}
	return Rational(0);
}

Rational eval_named(const NamedCocycle &c, const BasisVector &x, const BasisVector &y)
{
	auto mismatch = [&]() {
		return Error(ErrorCode::DomainMismatch,
		             cocycle_label(c) + " on (" + format_basis(x) + ", " + format_basis(y) + ")");
	};
	if (x.family == Family::C || y.family == Family::C)
		throw mismatch();
	bool delta = x.degree + y.degree == 0;
	switch (c.placement)
	{
	case Placement::Virasoro:
		if (x.family != Family::L || y.family != Family::L)
			throw mismatch();
		return delta ? cocycle_function(c, x.degree) : Rational(0);
	case Placement::Abelian:
		if (x.family != Family::M || y.family != Family::M)
			throw mismatch();
		return delta ? cocycle_function(c, x.degree) : Rational(0);
	case Placement::Mixing:
		if (x.family == Family::L && y.family == Family::M)
			return delta ? cocycle_function(c, x.degree) : Rational(0);
		if (x.family == Family::M && y.family == Family::L)
			return delta ? -cocycle_function(c, y.degree) : Rational(0);
		throw mismatch();
	}
	return Rational(0);
}

Rational eval_named_total(const NamedCocycle &c, const BasisVector &x, const BasisVector &y)
{
	if (x.family == Family::C || y.family == Family::C)
		return Rational(0);
	int mods = (x.family == Family::M) + (y.family == Family::M);
	Placement p = mods == 0 ? Placement::Virasoro : mods == 1 ? Placement::Mixing : Placement::Abelian;
	if (p != c.placement)
		return Rational(0);
	return eval_named(c, x, y);
}

bool cocycle_compatible(const AlgebraSpec &spec, const NamedCocycle &c)
{
	switch (c.id)
	{
	case CocycleId::OmegaVir: return true;
	case CocycleId::Omega0A:
	case CocycleId::OmegaMixA: return spec.is_a();
	case CocycleId::OmegaAbB:
	case CocycleId::OmegaMixB: return spec.is_b();
	default:
		if (c.placement == Placement::Virasoro)
			return true;
		return spec.has_module() && spec.module_shift() == 0;
	}
}

SparseVec restrict_named(const AlgebraSpec &spec, const NamedCocycle &c, int N)
{
	SparseVec out;
	for (Component comp : {Component::Vir, Component::Ab, Component::Mix})
		for (const auto &v : cochain_vars(spec, N, comp))
		{
			auto [x, y] = cochain_pair(spec, v);
			Rational val = eval_named_total(c, x, y);
			if (!val.is_zero())
				out.emplace(v, val);
		}
	return out;
}

std::vector<TripleDefect> is_cocycle(const AlgebraSpec &spec, const NamedCocycle &c, int N)
{
	AlgebraSpec base = spec.base();
	if (!cocycle_compatible(base, c))
		throw Error(ErrorCode::DomainMismatch, cocycle_label(c) + " on " + base.name());
	auto omega = [&](const BasisVector &x, const Element &e) {
		Rational s;
		for (const auto &[b, coeff] : e)
			s += coeff * eval_named_total(c, x, b);
		return s;
	};
	std::vector<BasisVector> basis = basis_window(base, N);
	std::vector<TripleDefect> out;
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j)
			for (std::size_t k = j + 1; k < basis.size(); ++k)
			{
				const auto &x = basis[i], &y = basis[j], &z = basis[k];
				Rational s = omega(x, bracket_basis(base, y, z)) + omega(y, bracket_basis(base, z, x)) +
				             omega(z, bracket_basis(base, x, y));
				if (!s.is_zero())
					out.push_back({x, y, z, s});
			}
	return out;
}

} // namespace witt
