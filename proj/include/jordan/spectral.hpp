#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

/// x = Σ λᵢ pᵢ with pairwise orthogonal idempotents summing to the unit.
/// Eigenvalues are distinct (clustered) and sorted in descending order.
struct SpectralDecomposition {
    AlgebraPtr algebra;
    std::vector<double> eigenvalues;
    std::vector<Element> idempotents;

    Element reconstruct() const;
};

struct AtomTerm {
    double eigenvalue;
    Element atom;
};

inline constexpr double kClusterTol = 1e-8;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kInverseTol = 1e-10;

SpectralDecomposition spectral_decomposition(const Element& x);

/// Eigenvalues of x with multiplicity (one entry per atom), descending.
std::vector<double> spectrum(const Element& x);
double min_eigenvalue(const Element& x);
bool is_positive(const Element& x);
/// inf{λ > 0 : −λe ≤ x ≤ λe}, i.e. the spectral radius.
double order_unit_norm(const Element& x);

/// Σ φ(λᵢ) pᵢ. Throws AlgebraError naming the eigenvalue if φ returns a
/// non-finite value.
Element functional_calculus(const Element& x, const std::function<double(double)>& phi);
Element functional_calculus(const SpectralDecomposition& d, const std::function<double(double)>& phi);

Element sqrt(const Element& x);
Element inverse(const Element& x);
/// Integer α: any x (negative α needs invertibility). Non-integer α: x ≥ 0,
/// with 0^α = 0 for α > 0.
Element pow(const Element& x, double alpha);

/// Split every idempotent into orthogonal atoms: x = Σ λᵢ aᵢ. Zero
/// eigenvalues are kept so the atoms always sum to the unit.
std::vector<AtomTerm> atomic_refinement(const SpectralDecomposition& d);

/// Atoms of a single idempotent (Σ result = p).
std::vector<Element> split_into_atoms(const Element& p);

/// Rank of an element counted in atoms (number of nonzero eigenvalues).
int element_rank(const Element& x, double tol = 1e-9);

}  // namespace jordan
