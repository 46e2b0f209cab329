#pragma once

// Finite-dimensional Euclidean Jordan algebras built as direct sums of the
// simple factors Real, Spin(n) and Sym(n).
//
// Coordinate layout per factor:
//   Real    one scalar
//   Spin(n) (s, u_1..u_n); (s,u)∘(t,v) = (st + <u,v>, sv + tu)
//   Sym(n)  upper triangle of the symmetric matrix, row-major. The value c
//           stored at an off-diagonal slot (i,j) is the matrix entry at both
//           (i,j) and (j,i).
//
// Products are evaluated by rebuilding dense blocks, operating and
// re-extracting coordinates.

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "jordan/errors.hpp"

namespace jordan {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class FactorKind { Real, Spin, Sym };

struct FactorDescriptor {
    FactorKind kind = FactorKind::Real;
    int n = 1;  // Spin: n >= 2, Sym: n >= 1, Real: always 1

    static FactorDescriptor real() { return {FactorKind::Real, 1}; }
    static FactorDescriptor spin(int n);
    static FactorDescriptor sym(int n);

    int dim() const;
    std::string name() const;  // "Real", "Spin(4)", "Sym(3)"

    friend bool operator==(const FactorDescriptor&, const FactorDescriptor&) = default;
    friend auto operator<=>(const FactorDescriptor&, const FactorDescriptor&) = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Direct sum of simple factors. Immutable; shared by every element that
/// lives in it.
class Algebra {
public:
    static AlgebraPtr make(std::vector<FactorDescriptor> factors);

    const std::vector<FactorDescriptor>& factors() const { return factors_; }
    int num_factors() const { return static_cast<int>(factors_.size()); }
    int dim() const { return total_dim_; }
    int offset(int factor) const { return offsets_[factor]; }
    const FactorDescriptor& factor(int i) const { return factors_[i]; }

    /// Index of the factor owning coordinate k.
    int factor_of_coordinate(int k) const;

    std::string name() const;  // "Real ⊕ Sym(3)"

    bool operator==(const Algebra& other) const { return factors_ == other.factors_; }

private:
    explicit Algebra(std::vector<FactorDescriptor> factors);

    std::vector<FactorDescriptor> factors_;
    std::vector<int> offsets_;
    int total_dim_ = 0;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

class Element {
public:
    Element(AlgebraPtr algebra, Vector coords);

    static Element zero(const AlgebraPtr& algebra);
    static Element unit(const AlgebraPtr& algebra);
    /// Unit of a single factor, zero elsewhere.
    static Element factor_unit(const AlgebraPtr& algebra, int factor);
    static Element basis(const AlgebraPtr& algebra, int k);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Vector& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    double operator[](int k) const { return coords_[k]; }

    /// Coordinates of one factor.
    Vector block(int factor) const;

    /// Euclidean norm of the coordinate vector (not the order-unit norm).
    double coord_norm() const { return coords_.norm(); }

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(double s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= -1.0; }
    friend Element operator*(double s, Element a) { return a *= s; }
    friend Element operator*(Element a, double s) { return a *= s; }

private:
    AlgebraPtr algebra_;
    Vector coords_;
};

/// Dense matrix acting on coordinates: codomain.dim() x domain.dim().
class LinearOperator {
public:
    LinearOperator(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix);

    static LinearOperator identity(const AlgebraPtr& algebra);

    const AlgebraPtr& domain() const { return domain_; }
    const AlgebraPtr& codomain() const { return codomain_; }
    const Matrix& matrix() const { return matrix_; }

    Element operator()(const Element& x) const;

private:
    AlgebraPtr domain_;
    AlgebraPtr codomain_;
    Matrix matrix_;
};

// Sym(n) block conversion.
Matrix sym_to_matrix(const Vector& block, int n);
Vector matrix_to_sym(const Matrix& m);

Element jordan_product(const Element& x, const Element& y);
Element square(const Element& x);
double inner_product(const Element& x, const Element& y);
Element triple_product(const Element& x, const Element& y, const Element& z);

/// Matrix of y ↦ {x,y,x}.
LinearOperator quadratic_rep(const Element& x);
/// Matrix of y ↦ x∘y.
LinearOperator multiplication_op(const Element& x);

Element op_apply(const LinearOperator& t, const Element& x);
/// s ∘ t, i.e. x ↦ s(t(x)).
LinearOperator op_compose(const LinearOperator& s, const LinearOperator& t);
LinearOperator op_invert(const LinearOperator& t);

inline constexpr double kInvertRcond = 1e-12;

}  // namespace jordan
