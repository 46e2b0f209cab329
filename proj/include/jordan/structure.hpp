#pragma once

#include <cstdint>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

inline constexpr double kStructureTol = 1e-10;
inline constexpr double kRankCutoff = 1e-9;

bool is_projection(const Element& p);
/// Nonzero projection with rank(U_p) = 1, i.e. U_p M = ℝp.
bool is_atom(const Element& p);
/// L_x commutes with L_b for every basis element b.
bool is_central(const Element& x);
bool are_orthogonal(const Element& p, const Element& q, double tol = kStructureTol);

/// Numerical rank with singular values cut at cutoff·σ_max.
int numerical_rank(const Matrix& m, double cutoff = kRankCutoff);

/// Basis of the center, from the null space of the stacked commutator system.
std::vector<Element> center_basis(const AlgebraPtr& a);

/// Minimal idempotents of the center, obtained from the spectral frame of a
/// random central element. Retries degenerate draws up to 20 times.
std::vector<Element> minimal_central_idempotents(const AlgebraPtr& a, std::uint64_t seed = 0);

/// M = M_D ⊕ M_E. Disengaged atoms are the central atoms; each spans a
/// one-dimensional summand.
struct Decomposition {
    AlgebraPtr algebra;
    Element p_D;
    Element p_E;
    std::vector<Element> disengaged_atoms;
    /// Coordinate of each disengaged atom's one-dimensional summand.
    std::vector<int> disengaged_coordinates;
    /// Factors absorbed by p_E, in order. Empty when M = M_D.
    std::vector<int> engaged_factors;
    /// Null when there is no engaged part.
    AlgebraPtr engaged;
    /// Injection of engaged coordinates into the full coordinates
    /// (algebra.dim() x engaged.dim()); empty when engaged is null.
    Matrix embedding;

    bool has_engaged() const { return engaged != nullptr; }
    int num_disengaged() const { return static_cast<int>(disengaged_atoms.size()); }

    /// Coefficient x_p with U_p x = x_p p.
    double disengaged_coefficient(const Element& x, int i) const;
    /// Engaged component of x in engaged coordinates.
    Element restrict_engaged(const Element& x) const;
    /// Inverse of restrict_engaged on M_E.
    Element embed_engaged(const Element& x_e) const;
};

/// Full pipeline: central idempotents → central atoms → p_D, p_E, M_E.
Decomposition decompose_engaged_disengaged(const AlgebraPtr& a, std::uint64_t seed = 0);

/// Factor rule: every one-dimensional factor is disengaged, everything
/// else engaged. Used to cross-check the pipeline.
Decomposition decompose_by_factor_dimension(const AlgebraPtr& a);

bool same_decomposition(const Decomposition& lhs, const Decomposition& rhs, double tol = kStructureTol);

/// Kernel of a multiplicative functional φ_p attached to a central atom p.
struct CodimOneIdeal {
    Element atom;
    Eigen::RowVectorXd functional;

    double operator()(const Element& x) const { return functional.dot(x.coords()); }
};

/// One ideal per central atom, φ_p read off U_p x = φ_p(x) p.
std::vector<CodimOneIdeal> codim1_ideals(const AlgebraPtr& a, std::uint64_t seed = 0);

}  // namespace jordan
