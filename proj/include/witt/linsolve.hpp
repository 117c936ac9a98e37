#pragma once

#include "witt/scalars.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace witt {

// Unknown families. Ordering of the enum is the variable order.
enum class VarTag : std::uint8_t {
	Vir, // v(n) = Ω(L_n, L_-n)
	Ab,  // α(n) = Ω(X_n, X_m), n the larger index
	Mix, // β(n) = Ω(L_n, X_m)
	LL, LX, XL, XX,    // Leibniz χ on ordered pairs, indexed by first degree
	SLL, SLX, SXX,     // symmetric forms θ
	DLL, DLX, DXL, DXX // derivation coefficients α_n, β_n, η_n, θ_n
};

struct VarIndex
{
	VarTag tag;
	int n;
	friend auto operator<=>(const VarIndex &, const VarIndex &) = default;
	friend bool operator==(const VarIndex &, const VarIndex &) = default;
};

std::string var_name(const VarIndex &v);
VarIndex parse_var(const std::string &text);

using SparseVec = std::map<VarIndex, Rational>;

void axpy(SparseVec &y, const Rational &a, const SparseVec &x);
Rational dot(const SparseVec &a, const SparseVec &b);

// Homogeneous system: every row asserts sum coeff * var = 0.
class LinearSystem
{
  public:
	void add_var(const VarIndex &v) { vars_.insert(v); }
	bool has_var(const VarIndex &v) const { return vars_.count(v) != 0; }
	// zero entries are dropped; an all-zero row is ignored
	void add_row(const SparseVec &row);

	const std::set<VarIndex> &vars() const { return vars_; }
	const std::vector<SparseVec> &rows() const { return rows_; }

	std::string dump() const;

  private:
	std::set<VarIndex> vars_;
	std::vector<SparseVec> rows_;
};

// Reduced row echelon basis: leading coefficient 1, strictly increasing leading
// variables, and every leading variable absent from the other vectors.
class SubspaceBasis
{
  public:
	SubspaceBasis() = default;
	static SubspaceBasis span(const std::set<VarIndex> &vars, const std::vector<SparseVec> &vectors);

	const std::set<VarIndex> &vars() const { return vars_; }
	const std::vector<SparseVec> &vectors() const { return vectors_; }
	std::size_t dim() const { return vectors_.size(); }

	// v minus its projection along the leading variables
	SparseVec reduce(SparseVec v) const;

	std::string dump() const;

  private:
	std::set<VarIndex> vars_;
	std::vector<SparseVec> vectors_;
};

SubspaceBasis kernel(const LinearSystem &sys);
std::size_t rank(const LinearSystem &sys);
bool in_span(const SubspaceBasis &space, const SparseVec &v);
int quotient_dim(const SubspaceBasis &space, const SubspaceBasis &sub);
// canonical complement of sub inside space: space vectors reduced modulo sub
SubspaceBasis quotient_basis(const SubspaceBasis &space, const SubspaceBasis &sub);

} // namespace witt
