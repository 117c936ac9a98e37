#include "witt/extension.hpp"

#include <algorithm>
#include <set>

namespace witt {

namespace {

std::set<VarIndex> all_cochain_vars(const AlgebraSpec &spec, int N)
{
	std::set<VarIndex> out;
	for (Component c : {Component::Vir, Component::Ab, Component::Mix})
	{
		auto vs = cochain_vars(spec, N, c);
		out.insert(vs.begin(), vs.end());
	}
	return out;
}

CentralAttachment attachment_for(const AlgebraSpec &plain, const CocycleChoice &ch)
{
	CentralAttachment att;
	att.central = ch.central;
	att.coeff = ch.coeff;
	if (const auto *nc = std::get_if<NamedCocycle>(&ch.cocycle))
	{
		if (!cocycle_compatible(plain, *nc))
			throw Error(ErrorCode::DomainMismatch, cocycle_label(*nc) + " on " + plain.name());
		att.label = cocycle_label(*nc);
		att.omega = [c = *nc](const BasisVector &x, const BasisVector &y) { return eval_named_total(c, x, y); };
		return att;
	}
	const auto &wc = std::get<WindowCochain>(ch.cocycle);
	std::set<VarIndex> allowed = all_cochain_vars(plain, wc.N);
	for (const auto &[v, _] : wc.values)
		if (!allowed.count(v))
			throw Error(ErrorCode::DomainMismatch, var_name(v) + " is not a 2-cochain variable of " + plain.name());
	att.label = wc.label;
	att.window = wc.N;
	att.omega = [plain, values = wc.values, N = wc.N](const BasisVector &x, const BasisVector &y) {
		return eval_cochain(plain, values, x, y, N);
	};
	return att;
}

bool pairwise_in_window(const BasisVector &x, const BasisVector &y, const BasisVector &z, int N)
{
	auto deg = [](const BasisVector &b) { return b.family == Family::C ? 0 : b.degree; };
	return in_window(deg(x) + deg(y), N) && in_window(deg(y) + deg(z), N) && in_window(deg(z) + deg(x), N);
}

} // namespace

AlgebraSpec build_central_extension(const AlgebraSpec &base, const CocycleSelection &sel)
{
	std::set<std::string> names;
	for (const auto &att : base.attached())
		names.insert(att.central);
	AlgebraSpec plain = base.base();
	AlgebraSpec out = base;
	for (const auto &ch : sel)
	{
		if (ch.central.empty() || !names.insert(ch.central).second)
			throw Error(ErrorCode::DuplicateCentralName, "c[" + ch.central + "] in " + out.name());
		out = out.with_attachment(attachment_for(plain, ch));
	}
	return out;
}

AlgebraSpec virasoro()
{
	return build_central_extension(AlgebraSpec::witt(), {{named_cocycle(CocycleId::OmegaVir), "Vir"}});
}

AlgebraSpec vir_a(const LambdaParam &lambda)
{
	return build_central_extension(AlgebraSpec::semidirect_a(lambda),
	                               {{named_cocycle(CocycleId::OmegaVir, lambda), "Vir"},
	                                {named_cocycle(CocycleId::OmegaMixA, lambda), "MixA"}});
}

AlgebraSpec vir_b(const LambdaParam &lambda)
{
	return build_central_extension(AlgebraSpec::semidirect_b(lambda),
	                               {{named_cocycle(CocycleId::OmegaVir, lambda), "Vir"},
	                                {named_cocycle(CocycleId::OmegaAbB, lambda), "AbB"},
	                                {named_cocycle(CocycleId::OmegaMixB, lambda), "MixB"}});
}

std::vector<ExtDefect> verify_extension(const AlgebraSpec &spec, int N)
{
	bool windowed = false;
	for (const auto &att : spec.attached())
		if (att.window)
		{
			windowed = true;
			N = std::min(N, *att.window);
		}
	std::vector<BasisVector> basis = basis_window(spec, N, true);
	std::vector<ExtDefect> out;
	for (const auto &att : spec.attached())
	{
		BasisVector c = Cb(att.central);
		for (const auto &x : basis)
			for (const Element &v : {bracket_basis(spec, c, x), bracket_basis(spec, x, c)})
				if (!v.is_zero())
					out.push_back({c, x, x, v});
	}
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j)
			for (std::size_t k = j + 1; k < basis.size(); ++k)
			{
				const auto &x = basis[i], &y = basis[j], &z = basis[k];
				if (windowed && !pairwise_in_window(x, y, z, N))
					continue;
				Element d = jacobi_defect(spec, Element(x), Element(y), Element(z));
				if (!d.is_zero())
					out.push_back({x, y, z, d});
			}
	return out;
}

AlgebraSpec cubic_mixing_extension(const AlgebraSpec &base)
{
	if (!base.has_module())
		throw Error(ErrorCode::NoModuleFamily, base.name());
	CentralAttachment att;
	att.label = "cubic_mix";
	att.central = "cubic";
	att.omega = [](const BasisVector &x, const BasisVector &y) {
		if (x.degree + y.degree != 0)
			return Rational(0);
		Rational n(x.degree), m(y.degree);
		if (x.family == Family::L && y.family == Family::M)
			return n * n * n;
		if (x.family == Family::M && y.family == Family::L)
			return -(m * m * m);
		return Rational(0);
	};
	return base.with_attachment(std::move(att));
}

std::vector<PairDefect> coboundary_trivialization(const AlgebraSpec &base, const BasisVector &e, int N)
{
	AlgebraSpec plain = base.base();
	const std::string c = "triv";
	CentralAttachment zero;
	zero.label = "zero";
	zero.central = c;
	zero.omega = [](const BasisVector &, const BasisVector &) { return Rational(0); };
	AlgebraSpec split = plain.with_attachment(zero);
	AlgebraSpec twisted =
	    build_central_extension(plain, {{WindowCochain{coboundary_vector(plain, e, N), N, "d(" + format_basis(e) + "*)"}, c}});

	auto F = [&](const Element &x) {
		Element y = x;
		y.add(Cb(c), -x.coeff(e));
		return y;
	};
	std::vector<BasisVector> basis = basis_window(split, N, true);
	std::vector<PairDefect> out;
	for (const auto &x : basis)
		for (const auto &y : basis)
		{
			if (x.family != Family::C && y.family != Family::C && !in_window(x.degree + y.degree, N))
				continue;
			Element lhs = F(bracket_basis(split, x, y));
			Element rhs = bracket(twisted, F(Element(x)), F(Element(y)));
			if (!(lhs == rhs))
				out.push_back({x, y, lhs, rhs});
		}
	return out;
}

} // namespace witt
