#pragma once

// Order isomorphisms between symmetric cones in classified form
//
//   f(x) = Σ_p f_p(x_p) σ(p) + U_y J x_E
//
// where p runs over the disengaged (central) atoms of the domain, σ is a
// bijection onto the disengaged atoms of the codomain, each f_p is a
// monotone bijection of the half-line, y lies in the interior of the
// codomain's engaged cone and J is a Jordan isomorphism between the engaged
// parts.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/monotone.hpp"
#include "jordan/structure.hpp"

namespace jordan {

inline constexpr double kInteriorTol = 1e-9;
inline constexpr double kJordanTol = 1e-9;

bool is_jordan_homomorphism(const LinearOperator& j);
bool is_jordan_isomorphism(const LinearOperator& j);

/// Why a linear map failed to factor as U_y J.
enum class FactorizationFailure { NotInterior, NotJordan };

class FactorizationError : public AlgebraError {
public:
    FactorizationError(FactorizationFailure reason, const std::string& what)
        : AlgebraError(what), reason_(reason) {}
    FactorizationFailure reason() const { return reason_; }

private:
    FactorizationFailure reason_;
};

struct LinearFactorization {
    Element y;
    LinearOperator jordan;
};

/// T = U_y J with y = (Te)^{1/2} and J = U_{y⁻¹} T. Throws
/// FactorizationError when Te is not interior or J is not a Jordan
/// isomorphism.
LinearFactorization factorize_linear_order_iso(const LinearOperator& t);

struct EngagedPart {
    Element y;               // interior of the codomain's engaged cone
    LinearOperator jordan;   // engaged domain → engaged codomain
};

class OrderIsoForm {
public:
    /// Validates σ, the f_p count, interiority of y and J being a Jordan
    /// isomorphism.
    static OrderIsoForm make(AlgebraPtr domain, AlgebraPtr codomain, std::vector<int> sigma,
                             std::vector<MonotoneBijection> maps, std::optional<EngagedPart> linear);

    /// Same, reusing already computed decompositions.
    static OrderIsoForm make(std::shared_ptr<const Decomposition> domain_dec,
                             std::shared_ptr<const Decomposition> codomain_dec, std::vector<int> sigma,
                             std::vector<MonotoneBijection> maps, std::optional<EngagedPart> linear);

    static OrderIsoForm identity(const AlgebraPtr& a);

    const AlgebraPtr& domain() const { return domain_; }
    const AlgebraPtr& codomain() const { return codomain_; }
    const std::vector<int>& sigma() const { return sigma_; }
    const std::vector<MonotoneBijection>& maps() const { return maps_; }
    const std::optional<EngagedPart>& linear() const { return linear_; }
    const Decomposition& domain_decomposition() const { return *domain_dec_; }
    const Decomposition& codomain_decomposition() const { return *codomain_dec_; }
    const std::shared_ptr<const Decomposition>& domain_decomposition_ptr() const { return domain_dec_; }
    const std::shared_ptr<const Decomposition>& codomain_decomposition_ptr() const { return codomain_dec_; }

    /// U_y J on engaged coordinates (empty when there is no engaged part).
    const Matrix& engaged_matrix() const { return engaged_matrix_; }
    /// U_y J embedded as an operator between the full algebras; zero on M_D.
    LinearOperator engaged_operator() const;

    Element operator()(const Element& x) const;

private:
    OrderIsoForm() = default;
    void validate();

    AlgebraPtr domain_;
    AlgebraPtr codomain_;
    std::vector<int> sigma_;
    std::vector<MonotoneBijection> maps_;
    std::optional<EngagedPart> linear_;
    std::shared_ptr<const Decomposition> domain_dec_;
    std::shared_ptr<const Decomposition> codomain_dec_;
    Matrix engaged_matrix_;
};

/// Throws AlgebraError("element not in cone") for x outside the cone.
Element apply_order_iso(const OrderIsoForm& f, const Element& x);
OrderIsoForm invert_order_iso(const OrderIsoForm& f);
/// outer ∘ inner: x ↦ outer(inner(x)).
OrderIsoForm compose_order_iso(const OrderIsoForm& outer, const OrderIsoForm& inner);

/// Random Jordan isomorphism a → b, matching equal factors under a random
/// permutation. Throws if the factor multisets differ.
LinearOperator random_jordan_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, std::uint64_t seed);
LinearOperator random_jordan_automorphism(const AlgebraPtr& a, std::uint64_t seed);

/// Samples the classified shape: y = w² + 0.1e, random J and σ, and
/// f_p = Power(α) with α ∈ [0.3, 3] (α = 1 unless allow_nonlinear).
OrderIsoForm random_order_iso(const AlgebraPtr& a, const AlgebraPtr& b, std::uint64_t seed, bool allow_nonlinear);

/// Every f_p is of the form t ↦ c·t.
bool check_linearity(const OrderIsoForm& f);

struct AffineRepresentation {
    LinearOperator linear;
    Element offset;
    double max_residual = 0.0;  // over the sampled translated-cone points
};

/// On a domain without disengaged atoms, f restricted to x + M₊ is
/// y ↦ S y + b. Throws AlgebraError("domain has disengaged atoms") otherwise.
AffineRepresentation affinity_on_translated_cone(const OrderIsoForm& f, const Element& x, std::uint64_t seed = 0,
                                                 int samples = 100);

/// Grid version of x(t) ↦ x(t)^{λ(t)}: points t ≤ ½ carry Real ⊕ Real
/// (diagonal 2x2 matrices), points t > ½ carry Sym(2), where λ must be 1.
struct GridPowerDemo {
    std::vector<double> grid;
    OrderIsoForm form;
};

GridPowerDemo grid_power_demo(int n_grid, const std::function<double(double)>& lambda);

}  // namespace jordan
