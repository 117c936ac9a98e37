#pragma once

#include "witt/cohomology.hpp"

namespace witt {

// χ(x, y) on an ordered weight-zero pair, no symmetry assumed
std::optional<VarIndex> leibniz_var(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y, int N);
std::pair<BasisVector, BasisVector> leibniz_pair(const AlgebraSpec &spec, const VarIndex &v);
std::set<VarIndex> leibniz_vars(const AlgebraSpec &spec, int N);

// θ(x, y) = θ(y, x) on a weight-zero pair
std::optional<VarIndex> inv_var(const AlgebraSpec &spec, const BasisVector &x, const BasisVector &y, int N);
std::pair<BasisVector, BasisVector> inv_pair(const AlgebraSpec &spec, const VarIndex &v);
std::set<VarIndex> inv_vars(const AlgebraSpec &spec, int N);

LinearSystem constraints_invariant_form(const AlgebraSpec &spec, int N);
LinearSystem constraints_leibniz(const AlgebraSpec &spec, int N);

// dφ(x, y) = -φ([x, y]) for φ dual to a weight-zero basis symbol
SubspaceBasis leibniz_coboundaries(const AlgebraSpec &spec, int N);

int hl2_dimension(const AlgebraSpec &spec, int N);
int inv_dimension(const AlgebraSpec &spec, int N);

// θ_A(A_0, A_0) = 1
SparseVec theta_a_vector();
// an antisymmetric 2-cochain written in Leibniz variables
SparseVec lie_to_leibniz(const AlgebraSpec &spec, const SparseVec &lie, int N);
// χ(x, y) + χ(y, x) written in Inv variables
SparseVec symmetrize(const AlgebraSpec &spec, const SparseVec &chi, int N);

struct ExactSequenceReport
{
	int h2 = 0, hl2 = 0, inv = 0, image_rank = 0;
	bool images_invariant = false;
	bool ok = false;
};

ExactSequenceReport exact_sequence_report(const AlgebraSpec &spec, int N);
bool exact_sequence_crosscheck(const AlgebraSpec &spec, int N);

} // namespace witt
