#include "jordan/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace jordan {

FactorDescriptor FactorDescriptor::spin(int n) {
    if (n < 2) throw AlgebraError("Spin(n) requires n >= 2, got " + std::to_string(n));
    return {FactorKind::Spin, n};
}

FactorDescriptor FactorDescriptor::sym(int n) {
    if (n < 1) throw AlgebraError("Sym(n) requires n >= 1, got " + std::to_string(n));
    return {FactorKind::Sym, n};
}

int FactorDescriptor::dim() const {
    switch (kind) {
        case FactorKind::Real: return 1;
        case FactorKind::Spin: return n + 1;
        case FactorKind::Sym: return n * (n + 1) / 2;
    }
    return 0;
}

std::string FactorDescriptor::name() const {
    switch (kind) {
        case FactorKind::Real: return "Real";
        case FactorKind::Spin: return "Spin(" + std::to_string(n) + ")";
        case FactorKind::Sym: return "Sym(" + std::to_string(n) + ")";
    }
    return "?";
}

Algebra::Algebra(std::vector<FactorDescriptor> factors) : factors_(std::move(factors)) {
    offsets_.reserve(factors_.size());
    for (const auto& f : factors_) {
        offsets_.push_back(total_dim_);
        total_dim_ += f.dim();
    }
}

AlgebraPtr Algebra::make(std::vector<FactorDescriptor> factors) {
    if (factors.empty()) throw AlgebraError("algebra needs at least one factor");
    for (auto& f : factors) {
        // Normalize through the checked constructors.
        if (f.kind == FactorKind::Real) f = FactorDescriptor::real();
        else if (f.kind == FactorKind::Spin) f = FactorDescriptor::spin(f.n);
        else f = FactorDescriptor::sym(f.n);
    }
    return AlgebraPtr(new Algebra(std::move(factors)));
}

int Algebra::factor_of_coordinate(int k) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), k);
    return static_cast<int>(it - offsets_.begin()) - 1;
}

std::string Algebra::name() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " ⊕ ";
        os << factors_[i].name();
    }
    return os.str();
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const Element& x, const Element& y) {
    if (!same_algebra(x.algebra(), y.algebra())) throw AlgebraError("algebra mismatch");
}

Vector factor_unit_block(const FactorDescriptor& f) {
    Vector b = Vector::Zero(f.dim());
    switch (f.kind) {
        case FactorKind::Real:
        case FactorKind::Spin: b[0] = 1.0; break;
        case FactorKind::Sym: b = matrix_to_sym(Matrix::Identity(f.n, f.n)); break;
    }
    return b;
}

Vector block_product(const FactorDescriptor& f, const Vector& a, const Vector& b) {
    switch (f.kind) {
        case FactorKind::Real: {
            Vector r(1);
            r[0] = a[0] * b[0];
            return r;
        }
        case FactorKind::Spin: {
            const int n = f.n;
            Vector r(n + 1);
            r[0] = a[0] * b[0] + a.tail(n).dot(b.tail(n));
            r.tail(n) = a[0] * b.tail(n) + b[0] * a.tail(n);
            return r;
        }
        case FactorKind::Sym: {
            const Matrix x = sym_to_matrix(a, f.n);
            const Matrix y = sym_to_matrix(b, f.n);
            const Matrix xy = x * y;
            const Matrix yx = y * x;
            return matrix_to_sym(0.5 * (xy + yx));
        }
    }
    return {};
}

double block_inner(const FactorDescriptor& f, const Vector& a, const Vector& b) {
    switch (f.kind) {
        case FactorKind::Real: return a[0] * b[0];
        case FactorKind::Spin: return 2.0 * (a[0] * b[0] + a.tail(f.n).dot(b.tail(f.n)));
        case FactorKind::Sym:
            return (sym_to_matrix(a, f.n).cwiseProduct(sym_to_matrix(b, f.n))).sum();
    }
    return 0.0;
}

}  // namespace

Matrix sym_to_matrix(const Vector& block, int n) {
    Matrix m(n, n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j, ++k) {
            m(i, j) = block[k];
            m(j, i) = block[k];
        }
    }
    return m;
}

Vector matrix_to_sym(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    Vector v(n * (n + 1) / 2);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) v[k++] = m(i, j);
    return v;
}

Element::Element(AlgebraPtr algebra, Vector coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (!algebra_) throw AlgebraError("element without algebra");
    if (coords_.size() != algebra_->dim())
        throw AlgebraError("element has " + std::to_string(coords_.size()) +
                           " coordinates, algebra dimension is " + std::to_string(algebra_->dim()));
}

Element Element::zero(const AlgebraPtr& algebra) {
    return Element(algebra, Vector::Zero(algebra->dim()));
}

Element Element::unit(const AlgebraPtr& algebra) {
    Vector v(algebra->dim());
    for (int f = 0; f < algebra->num_factors(); ++f)
        v.segment(algebra->offset(f), algebra->factor(f).dim()) = factor_unit_block(algebra->factor(f));
    return Element(algebra, std::move(v));
}

Element Element::factor_unit(const AlgebraPtr& algebra, int factor) {
    Vector v = Vector::Zero(algebra->dim());
    v.segment(algebra->offset(factor), algebra->factor(factor).dim()) =
        factor_unit_block(algebra->factor(factor));
    return Element(algebra, std::move(v));
}

Element Element::basis(const AlgebraPtr& algebra, int k) {
    Vector v = Vector::Zero(algebra->dim());
    v[k] = 1.0;
    return Element(algebra, std::move(v));
}

Vector Element::block(int factor) const {
    return coords_.segment(algebra_->offset(factor), algebra_->factor(factor).dim());
}

Element& Element::operator+=(const Element& other) {
    require_same(*this, other);
    coords_ += other.coords_;
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_same(*this, other);
    coords_ -= other.coords_;
    return *this;
}

Element& Element::operator*=(double s) {
    coords_ *= s;
    return *this;
}

LinearOperator::LinearOperator(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (!domain_ || !codomain_) throw AlgebraError("operator without algebra");
    if (matrix_.rows() != codomain_->dim() || matrix_.cols() != domain_->dim())
        throw AlgebraError("operator matrix shape does not match its algebras");
}

LinearOperator LinearOperator::identity(const AlgebraPtr& algebra) {
    return LinearOperator(algebra, algebra, Matrix::Identity(algebra->dim(), algebra->dim()));
}

Element LinearOperator::operator()(const Element& x) const { return op_apply(*this, x); }

Element jordan_product(const Element& x, const Element& y) {
    require_same(x, y);
    const Algebra& a = *x.algebra();
    Vector out(a.dim());
    for (int f = 0; f < a.num_factors(); ++f)
        out.segment(a.offset(f), a.factor(f).dim()) = block_product(a.factor(f), x.block(f), y.block(f));
    return Element(x.algebra(), std::move(out));
}

Element square(const Element& x) { return jordan_product(x, x); }

double inner_product(const Element& x, const Element& y) {
    require_same(x, y);
    const Algebra& a = *x.algebra();
    double s = 0.0;
    for (int f = 0; f < a.num_factors(); ++f) s += block_inner(a.factor(f), x.block(f), y.block(f));
    return s;
}

Element triple_product(const Element& x, const Element& y, const Element& z) {
    return jordan_product(jordan_product(x, y), z) + jordan_product(jordan_product(z, y), x) -
           jordan_product(jordan_product(x, z), y);
}

LinearOperator quadratic_rep(const Element& x) {
    const AlgebraPtr& a = x.algebra();
    Matrix m(a->dim(), a->dim());
    for (int j = 0; j < a->dim(); ++j) m.col(j) = triple_product(x, Element::basis(a, j), x).coords();
    return LinearOperator(a, a, std::move(m));
}

LinearOperator multiplication_op(const Element& x) {
    const AlgebraPtr& a = x.algebra();
    Matrix m(a->dim(), a->dim());
    for (int j = 0; j < a->dim(); ++j) m.col(j) = jordan_product(x, Element::basis(a, j)).coords();
    return LinearOperator(a, a, std::move(m));
}

Element op_apply(const LinearOperator& t, const Element& x) {
    if (!same_algebra(t.domain(), x.algebra())) throw AlgebraError("algebra mismatch");
    return Element(t.codomain(), t.matrix() * x.coords());
}

LinearOperator op_compose(const LinearOperator& s, const LinearOperator& t) {
    if (!same_algebra(s.domain(), t.codomain())) throw AlgebraError("algebra mismatch");
    return LinearOperator(t.domain(), s.codomain(), s.matrix() * t.matrix());
}

LinearOperator op_invert(const LinearOperator& t) {
    const Matrix& m = t.matrix();
    if (m.rows() != m.cols()) throw AlgebraError("singular operator: matrix is not square");
    Eigen::JacobiSVD<Matrix> svd(m);
    const Vector& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0 || sv[sv.size() - 1] / sv[0] < kInvertRcond)
        throw AlgebraError("singular operator");
    return LinearOperator(t.codomain(), t.domain(), m.partialPivLu().inverse());
}

}  // namespace jordan
