#include "witt/algebra.hpp"

#include <regex>
#include <sstream>

namespace witt {

void Element::add(const BasisVector &b, const Rational &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(b, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Rational Element::coeff(const BasisVector &b) const
{
	auto it = terms_.find(b);
	return it == terms_.end() ? Rational(0) : it->second;
}

Element &Element::operator+=(const Element &o)
{
	for (const auto &[b, c] : o.terms_)
		add(b, c);
	return *this;
}

Element &Element::operator-=(const Element &o)
{
	for (const auto &[b, c] : o.terms_)
		add(b, -c);
	return *this;
}

Element &Element::operator*=(const Rational &c)
{
	if (c.is_zero())
		terms_.clear();
	else
		for (auto &[b, v] : terms_)
			v *= c;
	return *this;
}

AlgebraSpec AlgebraSpec::witt() { return {}; }

AlgebraSpec AlgebraSpec::tensor_density(const Rational &a, const Rational &b)
{
	AlgebraSpec s;
	s.base_kind_ = Kind::TensorDensity;
	s.a_ = a;
	s.b_ = b;
	return s;
}

AlgebraSpec AlgebraSpec::semidirect_a(const LambdaParam &lambda)
{
	AlgebraSpec s;
	s.base_kind_ = Kind::SemidirectA;
	s.lambda_ = lambda;
	return s;
}

AlgebraSpec AlgebraSpec::semidirect_b(const LambdaParam &lambda)
{
	AlgebraSpec s;
	s.base_kind_ = Kind::SemidirectB;
	s.lambda_ = lambda;
	return s;
}

AlgebraSpec AlgebraSpec::base() const
{
	AlgebraSpec s = *this;
	s.attached_.clear();
	return s;
}

char AlgebraSpec::module_letter() const
{
	switch (base_kind_)
	{
	case Kind::TensorDensity: return 'I';
	case Kind::SemidirectA: return 'A';
	case Kind::SemidirectB: return 'B';
	default: return 'X';
	}
}

AlgebraSpec AlgebraSpec::with_attachment(CentralAttachment att) const
{
	AlgebraSpec s = *this;
	s.attached_.push_back(std::move(att));
	return s;
}

AlgebraSpec AlgebraSpec::with_fault(const WeightFault &f) const
{
	AlgebraSpec s = *this;
	s.fault_ = f;
	return s;
}

Rational AlgebraSpec::weight(const BasisVector &e) const
{
	switch (e.family)
	{
	case Family::L: return Rational(e.degree);
	case Family::M: return base_kind_ == Kind::TensorDensity ? Rational(e.degree) + a_ : Rational(e.degree);
	case Family::C: return Rational(0);
	}
	return Rational(0);
}

std::optional<int> AlgebraSpec::module_shift() const
{
	switch (base_kind_)
	{
	case Kind::Witt: return std::nullopt;
	case Kind::TensorDensity:
		if (!a_.is_integer())
			return std::nullopt;
		return static_cast<int>(a_.num().get_si());
	default: return 0;
	}
}

bool AlgebraSpec::is_valid_symbol(const BasisVector &e) const
{
	switch (e.family)
	{
	case Family::L: return e.name.empty();
	case Family::M: return has_module() && e.name.empty();
	case Family::C:
		if (e.degree != 0)
			return false;
		for (const auto &att : attached_)
			if (att.central == e.name)
				return true;
		return false;
	}
	return false;
}

std::string AlgebraSpec::name() const
{
	std::string s;
	switch (base_kind_)
	{
	case Kind::Witt: s = "W"; break;
	case Kind::TensorDensity: s = "W(" + a_.str() + "," + b_.str() + ")"; break;
	case Kind::SemidirectA: s = "W_A(" + lambda_.str() + ")"; break;
	case Kind::SemidirectB: s = "W_B(" + lambda_.str() + ")"; break;
	case Kind::Extended: break;
	}
	if (!attached_.empty())
	{
		s += "+{";
		for (std::size_t i = 0; i < attached_.size(); ++i)
			s += (i ? "," : "") + attached_[i].label + "->c[" + attached_[i].central + "]";
		s += "}";
	}
	return s;
}

Rational structure_weight(const AlgebraSpec &spec, int n, int m)
{
	Rational w;
	const LambdaParam &lam = spec.lambda();
	switch (spec.base_kind())
	{
	case Kind::Witt:
	case Kind::Extended: throw Error(ErrorCode::NoModuleFamily, spec.name());
	case Kind::TensorDensity: w = spec.a() + spec.b() * Rational(n) + Rational(m); break;
	case Kind::SemidirectA:
		w = Rational(n + m);
		if (m == 0)
			w += lam.is_infinite() ? Rational(n) * Rational(n) : Rational(n) * Rational(n + 1) * lam.value();
		break;
	case Kind::SemidirectB:
		w = Rational(m);
		if (n + m == 0)
			w -= lam.is_infinite() ? Rational(n) * Rational(n) : Rational(n) * Rational(n + 1) * lam.value();
		break;
	}
	if (const auto &f = spec.fault(); f && f->n == n && f->m == m)
		w += f->delta;
	return w;
}

namespace {

void check_symbol(const AlgebraSpec &spec, const BasisVector &e)
{
	if (!spec.is_valid_symbol(e))
		throw Error(ErrorCode::ForeignBasisSymbol, format_basis(e, spec.module_letter()) + " in " + spec.name());
}

} // namespace

Element bracket_basis(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y)
{
	check_symbol(spec, x);
	check_symbol(spec, y);
	Element r;
	if (x.family == Family::C || y.family == Family::C)
		return r;
	int n = x.degree, m = y.degree;
	if (x.family == Family::L && y.family == Family::L)
		r.add(Lb(n + m), Rational(m - n));
	else if (x.family == Family::L && y.family == Family::M)
		r.add(Xb(n + m), structure_weight(spec, n, m));
	else if (x.family == Family::M && y.family == Family::L)
		r.add(Xb(n + m), -structure_weight(spec, m, n));
	for (const auto &att : spec.attached())
		r.add(Cb(att.central), att.coeff * att.omega(x, y));
	return r;
}

Element bracket(const AlgebraSpec &spec, const Element &x, const Element &y)
{
	Element r;
	for (const auto &[bx, cx] : x)
		for (const auto &[by, cy] : y)
			r += (cx * cy) * bracket_basis(spec, bx, by);
	return r;
}

Element jacobi_defect(const AlgebraSpec &spec, const Element &x, const Element &y, const Element &z)
{
	Element r = bracket(spec, bracket(spec, x, y), z);
	r += bracket(spec, bracket(spec, y, z), x);
	r += bracket(spec, bracket(spec, z, x), y);
	return r;
}

std::vector<BasisVector> basis_window(const AlgebraSpec &spec, int N, bool with_central)
{
	std::vector<BasisVector> out;
	for (int n = -N; n <= N; ++n)
		out.push_back(Lb(n));
	if (spec.has_module())
		for (int n = -N; n <= N; ++n)
			out.push_back(Xb(n));
	if (with_central)
		for (const auto &att : spec.attached())
			out.push_back(Cb(att.central));
	return out;
}

std::string format_basis(const BasisVector &b, char module_letter)
{
	switch (b.family)
	{
	case Family::L: return "L[" + std::to_string(b.degree) + "]";
	case Family::M: return std::string(1, module_letter) + "[" + std::to_string(b.degree) + "]";
	case Family::C: return "c[" + b.name + "]";
	}
	return "?";
}

std::string format_element(const Element &x, char module_letter)
{
	if (x.is_zero())
		return "0";
	std::string s;
	for (const auto &[b, c] : x)
	{
		if (!s.empty())
			s += " + ";
		s += c.str() + "*" + format_basis(b, module_letter);
	}
	return s;
}

Element parse_element(const std::string &text)
{
	static const std::regex term_re(R"(^\s*(?:([+-]?\d+(?:/\d+)?)\s*\*\s*)?([LIABXc])\[([^\]]+)\]\s*$)");
	Element r;
	std::string t = text;
	if (t.find_first_not_of(" \t") == std::string::npos)
		throw Error(ErrorCode::MalformedNumber, "empty element");
	if (t == "0")
		return r;
	std::size_t pos = 0;
	while (pos <= t.size())
	{
		std::size_t next = t.find(" + ", pos);
		std::string piece = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
		std::smatch m;
		if (!std::regex_match(piece, m, term_re))
			throw Error(ErrorCode::MalformedNumber, "bad term '" + piece + "'");
		Rational c = m[1].matched ? parse_rational(m[1].str()) : Rational(1);
		char f = m[2].str()[0];
		std::string idx = m[3].str();
		if (f == 'c')
			r.add(Cb(idx), c);
		else
		{
			Rational d = parse_rational(idx);
			if (!d.is_integer())
				throw Error(ErrorCode::MalformedNumber, "degree '" + idx + "'");
			int deg = static_cast<int>(d.num().get_si());
			r.add(f == 'L' ? Lb(deg) : Xb(deg), c);
		}
		if (next == std::string::npos)
			break;
		pos = next + 3;
	}
	return r;
}

bool in_derived_span(const AlgebraSpec &spec, const BasisVector &e, int N)
{
	if (e.family == Family::C)
		return false;
	// brackets landing in degree d live in span{L_d, X_d}; track a basis of what they reach
	std::vector<std::pair<Rational, Rational>> reach;
	auto add = [&](Rational l, Rational x) {
		for (const auto &[rl, rx] : reach)
		{
			// eliminate against the stored pivot
			if (!rl.is_zero())
			{
				Rational f = l / rl;
				l -= f * rl, x -= f * rx;
			}
			else if (!rx.is_zero())
			{
				Rational f = x / rx;
				l -= f * rl, x -= f * rx;
			}
		}
		if (!l.is_zero() || !x.is_zero())
			reach.emplace_back(l, x);
	};
	std::vector<BasisVector> basis = basis_window(spec, N);
	for (const auto &x : basis)
		for (const auto &y : basis)
			if (x.degree + y.degree == e.degree && x < y)
			{
				Element br = bracket_basis(spec, x, y);
				add(br.coeff(Lb(e.degree)), br.coeff(Xb(e.degree)));
			}
	if (reach.size() >= 2)
		return true;
	if (reach.empty())
		return false;
	const auto &[l, x] = reach.front();
	return e.family == Family::L ? x.is_zero() : l.is_zero();
}

Element adjoint_hom_f(int n) { return Element(Xb(n), Rational(n)); }

std::vector<FDefect> check_f_equivariance(const LambdaParam &lambda, int N)
{
	AlgebraSpec wa = AlgebraSpec::semidirect_a(lambda);
	AlgebraSpec wb = AlgebraSpec::semidirect_b(lambda);
	auto f = [](const Element &x) {
		Element r;
		for (const auto &[b, c] : x)
			if (b.family == Family::M)
				r += c * adjoint_hom_f(b.degree);
		return r;
	};
	std::vector<FDefect> out;
	for (int n = -N; n <= N; ++n)
		for (int m = -N; m <= N; ++m)
		{
			if (n + m < -N || n + m > N)
				continue;
			Element lhs = f(bracket(wb, Lb(n), Xb(m)));
			Element rhs = bracket(wa, Lb(n), f(Xb(m)));
			if (!(lhs == rhs))
				out.push_back({n, m, lhs, rhs});
		}
	return out;
}

} // namespace witt
