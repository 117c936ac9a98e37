#pragma once

#include "witt/cohomology.hpp"
#include "witt/morphisms.hpp"

#include <variant>

namespace witt {

// a cocycle known only on a window, in the cochain variables of the base
struct WindowCochain
{
	SparseVec values;
	int N = 0;
	std::string label = "window";
};

struct CocycleChoice
{
	std::variant<NamedCocycle, WindowCochain> cocycle;
	std::string central;
	Rational coeff{1};
};

using CocycleSelection = std::vector<CocycleChoice>;

AlgebraSpec build_central_extension(const AlgebraSpec &base, const CocycleSelection &sel);

// W + Ω_Vir
AlgebraSpec virasoro();
// W_A(λ) + {Ω_Vir, Ω^A_Mix}
AlgebraSpec vir_a(const LambdaParam &lambda);
// W_B(λ) + {Ω_Vir, Ω^B_Ab, Ω^B_Mix}
AlgebraSpec vir_b(const LambdaParam &lambda);

struct ExtDefect
{
	BasisVector x, y, z;
	Element value;
};

// Jacobi on x < y < z of the window (centrals included) plus centrality of every c.
// A centrality failure is reported as (c, x, x) with value [c, x].
std::vector<ExtDefect> verify_extension(const AlgebraSpec &spec, int N);

// base + n³ δ_{n+m} on (L_n, X_m): not a cocycle, Jacobi must fail
AlgebraSpec cubic_mixing_extension(const AlgebraSpec &base);

// dψ for ψ dual to the weight-zero symbol e attached to base as c; F(x) = x - ψ(x)c
// must carry base ⊕ Cc onto it. Returns the pairs where F fails to preserve brackets.
std::vector<PairDefect> coboundary_trivialization(const AlgebraSpec &base, const BasisVector &e, int N);

} // namespace witt
