#pragma once

#include "witt/scalars.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace witt {

// L = Witt family, M = module family (printed I, A or B), C = named central generator
enum class Family : std::uint8_t { L = 0, M = 1, C = 2 };

struct BasisVector
{
	Family family = Family::L;
	int degree = 0;
	std::string name; // only for C

	friend auto operator<=>(const BasisVector &, const BasisVector &) = default;
	friend bool operator==(const BasisVector &, const BasisVector &) = default;
};

inline BasisVector Lb(int n) { return {Family::L, n, {}}; }
inline BasisVector Xb(int n) { return {Family::M, n, {}}; }
inline BasisVector Cb(std::string name) { return {Family::C, 0, std::move(name)}; }

class Element
{
  public:
	using Map = std::map<BasisVector, Rational>;

	Element() = default;
	Element(const BasisVector &b, const Rational &c = Rational(1)) { add(b, c); }

	void add(const BasisVector &b, const Rational &c);
	Rational coeff(const BasisVector &b) const;
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	const Map &terms() const { return terms_; }
	Map::const_iterator begin() const { return terms_.begin(); }
	Map::const_iterator end() const { return terms_.end(); }

	Element &operator+=(const Element &o);
	Element &operator-=(const Element &o);
	Element &operator*=(const Rational &c);
	friend Element operator+(Element a, const Element &b) { return a += b; }
	friend Element operator-(Element a, const Element &b) { return a -= b; }
	friend Element operator*(const Rational &c, Element a) { return a *= c; }
	friend bool operator==(const Element &, const Element &) = default;

  private:
	Map terms_;
};

enum class Kind { Witt, TensorDensity, SemidirectA, SemidirectB, Extended };

// One attached central generator c with bracket contribution coeff * omega(x, y) * c.
struct CentralAttachment
{
	std::string label;   // cocycle identifier, for printing/serialisation
	std::string central; // name of c
	Rational coeff{1};
	std::function<Rational(const BasisVector &, const BasisVector &)> omega;
	std::optional<int> window; // set when omega is only known on [-window, window]
};

// Test hook: perturbs one structure constant so negative controls have something to find.
struct WeightFault
{
	int n = 0;
	int m = 0;
	Rational delta{1};
};

class AlgebraSpec
{
  public:
	static AlgebraSpec witt();
	static AlgebraSpec tensor_density(const Rational &a, const Rational &b);
	static AlgebraSpec semidirect_a(const LambdaParam &lambda);
	static AlgebraSpec semidirect_b(const LambdaParam &lambda);

	// Extended if any central generator is attached
	Kind kind() const { return attached_.empty() ? base_kind_ : Kind::Extended; }
	Kind base_kind() const { return base_kind_; }
	AlgebraSpec base() const;

	bool has_module() const { return base_kind_ != Kind::Witt; }
	bool is_a() const { return base_kind_ == Kind::SemidirectA; }
	bool is_b() const { return base_kind_ == Kind::SemidirectB; }
	char module_letter() const;

	const Rational &a() const { return a_; }
	const Rational &b() const { return b_; }
	const LambdaParam &lambda() const { return lambda_; }

	const std::vector<CentralAttachment> &attached() const { return attached_; }
	AlgebraSpec with_attachment(CentralAttachment att) const;

	const std::optional<WeightFault> &fault() const { return fault_; }
	AlgebraSpec with_fault(const WeightFault &f) const;

	// eigenvalue of ad L_0 on a basis vector
	Rational weight(const BasisVector &e) const;
	// degree shift between X and its ad L_0 weight, if integral (a for W(a,b), else 0)
	std::optional<int> module_shift() const;
	bool is_valid_symbol(const BasisVector &e) const;

	std::string name() const;

  private:
	Kind base_kind_ = Kind::Witt;
	Rational a_, b_;
	LambdaParam lambda_;
	std::vector<CentralAttachment> attached_;
	std::optional<WeightFault> fault_;
};

Rational structure_weight(const AlgebraSpec &spec, int n, int m);

Element bracket_basis(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y);
Element bracket(const AlgebraSpec &spec, const Element &x, const Element &y);
Element jacobi_defect(const AlgebraSpec &spec, const Element &x, const Element &y, const Element &z);

// basis symbols with degree in [-N, N]; central generators appended when asked
std::vector<BasisVector> basis_window(const AlgebraSpec &spec, int N, bool with_central = false);

std::string format_basis(const BasisVector &b, char module_letter = 'X');
std::string format_element(const Element &x, char module_letter = 'X');
// accepts I, A, B or X for the module family
Element parse_element(const std::string &text);

// whether e lies in the span of brackets [x, y] of window basis vectors
bool in_derived_span(const AlgebraSpec &spec, const BasisVector &e, int N);

// f: B(λ) -> A(λ), B_n ↦ n A_n
Element adjoint_hom_f(int n);

struct FDefect
{
	int n, m;
	Element lhs, rhs;
};
std::vector<FDefect> check_f_equivariance(const LambdaParam &lambda, int N);

} // namespace witt
