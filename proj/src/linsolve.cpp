#include "witt/linsolve.hpp"

#include <algorithm>
#include <array>

namespace witt {

namespace {

constexpr std::array<const char *, 14> kTagNames = {
    "v", "alpha", "beta", "LL", "LX", "XL", "XX", "sLL", "sLX", "sXX", "dLL", "dLX", "dXL", "dXX"};

// Incremental RREF of a row space.
class Echelon
{
  public:
	bool insert(SparseVec v)
	{
		std::vector<VarIndex> keys;
		for (const auto &[k, c] : v)
			if (pivots_.count(k))
				keys.push_back(k);
		for (const auto &k : keys)
		{
			auto it = v.find(k);
			if (it == v.end())
				continue;
			Rational c = it->second;
			axpy(v, -c, pivots_.at(k));
		}
		if (v.empty())
			return false;
		VarIndex lead = v.begin()->first;
		Rational inv = Rational(1) / v.begin()->second;
		for (auto &[k, c] : v)
			c *= inv;
		for (auto &[p, row] : pivots_)
		{
			auto it = row.find(lead);
			if (it == row.end())
				continue;
			Rational c = it->second;
			axpy(row, -c, v);
		}
		pivots_.emplace(lead, std::move(v));
		return true;
	}

	const std::map<VarIndex, SparseVec> &pivots() const { return pivots_; }

  private:
	std::map<VarIndex, SparseVec> pivots_;
};

SparseVec normalized(const SparseVec &row)
{
	SparseVec out = row;
	if (out.empty())
		return out;
	Rational inv = Rational(1) / out.begin()->second;
	for (auto &[k, c] : out)
		c *= inv;
	return out;
}

Echelon eliminate(const LinearSystem &sys)
{
	std::set<SparseVec> unique;
	for (const auto &r : sys.rows())
		unique.insert(normalized(r));
	Echelon e;
	for (const auto &r : unique)
		e.insert(r);
	return e;
}

std::string vec_line(const SparseVec &v)
{
	std::string s;
	for (const auto &[k, c] : v)
		s += (s.empty() ? "" : " ") + var_name(k) + " " + c.str();
	return s;
}

} // namespace

std::string var_name(const VarIndex &v)
{
	return std::string(kTagNames[static_cast<std::size_t>(v.tag)]) + "(" + std::to_string(v.n) + ")";
}

VarIndex parse_var(const std::string &text)
{
	auto open = text.find('(');
	if (open == std::string::npos || text.back() != ')')
		throw Error(ErrorCode::MalformedNumber, "variable '" + text + "'");
	std::string tag = text.substr(0, open);
	auto it = std::find(kTagNames.begin(), kTagNames.end(), tag);
	if (it == kTagNames.end())
		throw Error(ErrorCode::MalformedNumber, "variable tag '" + tag + "'");
	Rational n = parse_rational(text.substr(open + 1, text.size() - open - 2));
	if (!n.is_integer())
		throw Error(ErrorCode::MalformedNumber, "variable index in '" + text + "'");
	return {static_cast<VarTag>(it - kTagNames.begin()), static_cast<int>(n.num().get_si())};
}

void axpy(SparseVec &y, const Rational &a, const SparseVec &x)
{
	if (a.is_zero())
		return;
	for (const auto &[k, c] : x)
	{
		auto [it, inserted] = y.try_emplace(k, a * c);
		if (!inserted)
		{
			it->second += a * c;
			if (it->second.is_zero())
				y.erase(it);
		}
	}
}

Rational dot(const SparseVec &a, const SparseVec &b)
{
	Rational s;
	for (const auto &[k, c] : a)
		if (auto it = b.find(k); it != b.end())
			s += c * it->second;
	return s;
}

void LinearSystem::add_row(const SparseVec &row)
{
	SparseVec clean;
	for (const auto &[k, c] : row)
	{
		if (!vars_.count(k))
			throw Error(ErrorCode::DomainMismatch, "undeclared variable " + var_name(k));
		if (!c.is_zero())
			clean.emplace(k, c);
	}
	if (!clean.empty())
		rows_.push_back(std::move(clean));
}

std::string LinearSystem::dump() const
{
	std::string s = "vars";
	for (const auto &v : vars_)
		s += " " + var_name(v);
	s += "\n";
	for (const auto &r : rows_)
		s += "row " + vec_line(r) + "\n";
	return s;
}

SubspaceBasis SubspaceBasis::span(const std::set<VarIndex> &vars, const std::vector<SparseVec> &vectors)
{
	Echelon e;
	for (const auto &v : vectors)
	{
		for (const auto &[k, c] : v)
			if (!vars.count(k))
				throw Error(ErrorCode::DomainMismatch, "vector uses foreign variable " + var_name(k));
		e.insert(v);
	}
	SubspaceBasis b;
	b.vars_ = vars;
	for (const auto &[lead, row] : e.pivots())
		b.vectors_.push_back(row);
	return b;
}

SparseVec SubspaceBasis::reduce(SparseVec v) const
{
	for (const auto &b : vectors_)
	{
		auto it = v.find(b.begin()->first);
		if (it == v.end())
			continue;
		Rational c = it->second;
		axpy(v, -c, b);
	}
	return v;
}

std::string SubspaceBasis::dump() const
{
	std::string s;
	for (const auto &v : vectors_)
		s += "vec " + vec_line(v) + "\n";
	return s;
}

SubspaceBasis kernel(const LinearSystem &sys)
{
	Echelon e = eliminate(sys);
	const auto &piv = e.pivots();
	std::vector<SparseVec> vecs;
	for (const auto &f : sys.vars())
	{
		if (piv.count(f))
			continue;
		SparseVec v{{f, Rational(1)}};
		for (const auto &[p, row] : piv)
			if (auto it = row.find(f); it != row.end())
				v.emplace(p, -it->second);
		vecs.push_back(std::move(v));
	}
	return SubspaceBasis::span(sys.vars(), vecs);
}

std::size_t rank(const LinearSystem &sys) { return eliminate(sys).pivots().size(); }

bool in_span(const SubspaceBasis &space, const SparseVec &v)
{
	SparseVec clean;
	for (const auto &[k, c] : v)
		if (!c.is_zero())
			clean.emplace(k, c);
	return space.reduce(std::move(clean)).empty();
}

int quotient_dim(const SubspaceBasis &space, const SubspaceBasis &sub)
{
	for (const auto &v : sub.vectors())
		if (!in_span(space, v))
			throw Error(ErrorCode::NotASubspace, "vector [" + vec_line(v) + "] not in space");
	return static_cast<int>(space.dim()) - static_cast<int>(sub.dim());
}

SubspaceBasis quotient_basis(const SubspaceBasis &space, const SubspaceBasis &sub)
{
	quotient_dim(space, sub);
	std::vector<SparseVec> reduced;
	for (const auto &v : space.vectors())
		reduced.push_back(sub.reduce(v));
	return SubspaceBasis::span(space.vars(), reduced);
}

} // namespace witt
