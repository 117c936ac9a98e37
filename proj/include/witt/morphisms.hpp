#pragma once

#include "witt/cohomology.hpp"

#include <utility>
#include <vector>

namespace witt {

// Φ = Π exp(c_i ad X_i) ∘ τ^k ∘ φ_a ∘ ψ_b ∘ σ_α ∘ μ_ξ, rightmost factor applied first.
struct AutSpec
{
	int k = 0;
	Rational a{0}, b{0};
	Rational alpha{1}, xi{1};
	std::vector<std::pair<int, Rational>> inner; // (i, c): exp(c ad X_i)

	friend bool operator==(const AutSpec &, const AutSpec &) = default;
};

std::string format_aut(const AutSpec &s);

// sorted, merged, zero coefficients dropped; index 0 dropped for W_B
AutSpec normalize_aut(const AutSpec &s, const AlgebraSpec &spec);
void validate_aut(const AutSpec &s, const AlgebraSpec &spec);

Element apply_aut(const AutSpec &s, const AlgebraSpec &spec, const Element &x);

struct PairDefect
{
	BasisVector x, y;
	Element lhs, rhs;
};

std::vector<PairDefect> check_aut(const AutSpec &s, const AlgebraSpec &spec, int N);
AutSpec compose_auts(const AutSpec &s1, const AutSpec &s2, const AlgebraSpec &spec);
AutSpec inverse_aut(const AutSpec &s, const AlgebraSpec &spec);

// exp(-a ad A_0) against the outer automorphism with φ-part λa and ψ-part (λ+1)a
bool inner_identity_check(const LambdaParam &lambda, int N, const Rational &a);
bool inner_identity_check(const LambdaParam &lambda, int N);

// --- derivations -------------------------------------------------------------

enum class DerGen { AdInner, DAb, DeltaA, PartialA, DB, PartialB0 };

struct DerTerm
{
	DerGen gen;
	Rational coeff{1};
	Element inner; // AdInner only
};

struct DerSpec
{
	std::vector<DerTerm> terms;

	static DerSpec of(DerGen g, const Rational &c = Rational(1)) { return {{{g, c, {}}}}; }
	static DerSpec ad(const Element &y, const Rational &c = Rational(1)) { return {{{DerGen::AdInner, c, y}}}; }
	DerSpec &operator+=(const DerSpec &o)
	{
		terms.insert(terms.end(), o.terms.begin(), o.terms.end());
		return *this;
	}
	friend DerSpec operator+(DerSpec a, const DerSpec &b) { return a += b; }
};

std::string der_gen_name(DerGen g);
// d^A_λ: δ if λ ≠ 0, ∂ if λ = 0
DerSpec d_a_lambda(const LambdaParam &lambda);
void validate_der(const DerSpec &d, const AlgebraSpec &spec);

Element apply_der(const DerSpec &d, const AlgebraSpec &spec, const Element &x);
std::vector<PairDefect> check_der(const DerSpec &d, const AlgebraSpec &spec, int N);

// the outer derivations spanning H¹(g; g) for W_X(λ)
std::vector<DerSpec> named_outer_derivations(const AlgebraSpec &spec);

// degree-0 derivation unknowns D(src) = Σ var(src -> tgt) tgt
std::set<VarIndex> derivation_vars(const AlgebraSpec &spec, int N);
std::pair<BasisVector, BasisVector> derivation_pair(const AlgebraSpec &spec, const VarIndex &v);
LinearSystem constraints_derivation(const AlgebraSpec &spec, int N);
SubspaceBasis inner_derivations(const AlgebraSpec &spec, int N);
SparseVec derivation_vector(const DerSpec &d, const AlgebraSpec &spec, int N);
int h1_adjoint_dimension(const AlgebraSpec &spec, int N);

// --- one-parameter families --------------------------------------------------

enum class OneParam { Mu, PsiA, PhiA, PhiB, PsiB0 };

AutSpec one_param_aut(OneParam f, const Rational &t);
DerSpec one_param_derivative(OneParam f, const AlgebraSpec &spec);
// t-coefficient of t ↦ apply_aut(f(t), x), read off from two evaluations
Element t_coefficient(OneParam f, const AlgebraSpec &spec, const BasisVector &x, const Rational &t1,
                      const Rational &t2);
bool differentiation_consistent(OneParam f, const AlgebraSpec &spec, int N);

} // namespace witt
