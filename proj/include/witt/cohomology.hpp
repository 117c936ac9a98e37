#pragma once

#include "witt/algebra.hpp"
#include "witt/linsolve.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace witt {

// --- grading helpers shared by the solvers -------------------------------

inline bool in_window(int d, int N) { return d >= -N && d <= N; }
inline bool in_window(const BasisVector &e, int N) { return e.family == Family::C || in_window(e.degree, N); }

// degree m such that weight(x) + weight(family_y, m) == 0, if integral
std::optional<int> partner_degree(const AlgebraSpec &spec, const BasisVector &x, Family family_y);
// weight-preserving image degree of x inside family_t, if integral
std::optional<int> same_weight_degree(const AlgebraSpec &spec, const BasisVector &x, Family family_t);
// the weight-zero basis symbols of the window (L_0, and X_{-a} when integral)
std::vector<BasisVector> weight_zero_basis(const AlgebraSpec &spec, int N);

// --- 2-cochains ------------------------------------------------------------

enum class Component { Vir, Ab, Mix };

struct VarRef
{
	VarIndex var;
	int sign;
};

// the variable carrying Ω(x, y) and its sign, or nothing if Ω(x, y) is forced to 0
std::optional<VarRef> cochain_var(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y, int N);
// representative ordered pair of a cochain variable: Ω(pair) = +var
std::pair<BasisVector, BasisVector> cochain_pair(const AlgebraSpec &spec, const VarIndex &v);
std::set<VarIndex> cochain_vars(const AlgebraSpec &spec, int N, Component c);
Rational eval_cochain(const AlgebraSpec &spec, const SparseVec &values, const BasisVector &x, const BasisVector &y,
                      int N);

LinearSystem constraints_virasoro(int N);
LinearSystem constraints_abelian(const AlgebraSpec &spec, int N);
LinearSystem constraints_mixing(const AlgebraSpec &spec, int N);
LinearSystem constraints_component(const AlgebraSpec &spec, int N, Component c);
// all three components in one system
LinearSystem constraints_h2_full(const AlgebraSpec &spec, int N);

// dψ for ψ the dual of a weight-zero basis symbol e: dψ(x, y) = -ψ([x, y])
SparseVec coboundary_vector(const AlgebraSpec &spec, const BasisVector &e, int N);
SubspaceBasis coboundary_space_h2(const AlgebraSpec &spec, int N);
SubspaceBasis coboundary_component(const AlgebraSpec &spec, int N, Component c);

struct H2Dims
{
	int vir = 0, ab = 0, mix = 0, total = 0;
	friend bool operator==(const H2Dims &, const H2Dims &) = default;
};

H2Dims h2_dimensions(const AlgebraSpec &spec, int N);
// one unsplit solve; must agree with h2_dimensions().total
int h2_total_direct(const AlgebraSpec &spec, int N);

// --- named cocycles --------------------------------------------------------

enum class CocycleId { OmegaVir, Omega0A, OmegaMixA, OmegaAbB, OmegaMixB, Iota, BetaLambda, Gamma1, Gamma2, EtaLambda };
enum class Placement { Virasoro, Abelian, Mixing };

struct NamedCocycle
{
	CocycleId id;
	LambdaParam lambda;
	Placement placement;
};

NamedCocycle named_cocycle(CocycleId id, const LambdaParam &lambda = LambdaParam::finite(0));
NamedCocycle named_function(CocycleId id, const LambdaParam &lambda, Placement placement);
std::string cocycle_label(const NamedCocycle &c);

// scalar function n ↦ f(n) behind the cocycle (Vir: n(n²-1)/12)
Rational cocycle_function(const NamedCocycle &c, int n);
// strict: DomainMismatch when the pair is outside the cocycle's component
Rational eval_named(const NamedCocycle &c, const BasisVector &x, const BasisVector &y);
// total: 0 outside the component
Rational eval_named_total(const NamedCocycle &c, const BasisVector &x, const BasisVector &y);

bool cocycle_compatible(const AlgebraSpec &spec, const NamedCocycle &c);
SparseVec restrict_named(const AlgebraSpec &spec, const NamedCocycle &c, int N);

struct TripleDefect
{
	BasisVector x, y, z;
	Rational value;
};

std::vector<TripleDefect> is_cocycle(const AlgebraSpec &spec, const NamedCocycle &c, int N);

// smallest windows accepted by the dimension routines
constexpr int kMinWindowH2 = 5;
constexpr int kMinWindowHL2 = 5;
constexpr int kMinWindowH1 = 5;

} // namespace witt
