#include "jordan/order_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jordan/random.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

namespace {

const char* kNotIsomorphic = "cones not order isomorphic under supported factors";

std::shared_ptr<const Decomposition> decompose(const AlgebraPtr& a) {
    return std::make_shared<const Decomposition>(decompose_engaged_disengaged(a));
}

std::vector<FactorDescriptor> sorted_factors(const AlgebraPtr& a) {
    if (!a) return {};
    auto f = a->factors();
    std::sort(f.begin(), f.end());
    return f;
}

Matrix factor_automorphism(const FactorDescriptor& f, Rng& rng) {
    switch (f.kind) {
        case FactorKind::Real: return Matrix::Identity(1, 1);
        case FactorKind::Spin: {
            Matrix m = Matrix::Identity(f.n + 1, f.n + 1);
            m.bottomRightCorner(f.n, f.n) = random_orthogonal(f.n, rng);
            return m;
        }
        case FactorKind::Sym: {
            const Matrix q = random_orthogonal(f.n, rng);
            Matrix m(f.dim(), f.dim());
            for (int k = 0; k < f.dim(); ++k) {
                Vector b = Vector::Zero(f.dim());
                b[k] = 1.0;
                m.col(k) = matrix_to_sym(q.transpose() * sym_to_matrix(b, f.n) * q);
            }
            return m;
        }
    }
    return {};
}

}  // namespace

bool is_jordan_homomorphism(const LinearOperator& j) {
    const AlgebraPtr& dom = j.domain();
    const AlgebraPtr& cod = j.codomain();
    const Matrix& m = j.matrix();
    if (order_unit_norm(j(Element::unit(dom)) - Element::unit(cod)) > kJordanTol) return false;

    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    const double tol = kJordanTol * (1.0 + norm * norm);
    std::vector<Element> images;
    images.reserve(dom->dim());
    for (int i = 0; i < dom->dim(); ++i) images.emplace_back(cod, m.col(i));
    for (int i = 0; i < dom->dim(); ++i) {
        const Element bi = Element::basis(dom, i);
        for (int k = i; k < dom->dim(); ++k) {
            const Vector lhs = m * jordan_product(bi, Element::basis(dom, k)).coords();
            const Vector rhs = jordan_product(images[i], images[k]).coords();
            if ((lhs - rhs).cwiseAbs().maxCoeff() > tol) return false;
        }
    }
    return true;
}

bool is_jordan_isomorphism(const LinearOperator& j) {
    const Matrix& m = j.matrix();
    if (m.rows() != m.cols()) return false;
    Eigen::JacobiSVD<Matrix> svd(m);
    const Vector& s = svd.singularValues();
    if (s.size() == 0 || s[0] == 0.0 || s[s.size() - 1] / s[0] < kInvertRcond) return false;
    return is_jordan_homomorphism(j);
}

LinearFactorization factorize_linear_order_iso(const LinearOperator& t) {
    if (t.matrix().rows() != t.matrix().cols()) throw AlgebraError("factorization needs a square operator");
    const Element te = t(Element::unit(t.domain()));
    if (!(min_eigenvalue(te) > kInteriorTol))
        throw FactorizationError(FactorizationFailure::NotInterior, "Te not in interior of cone");
    Element y = sqrt(te);
    LinearOperator j = op_compose(quadratic_rep(inverse(y)), t);
    if (!is_jordan_isomorphism(j))
        throw FactorizationError(FactorizationFailure::NotJordan, "residual map is not a Jordan isomorphism");
    return {std::move(y), std::move(j)};
}

OrderIsoForm OrderIsoForm::make(AlgebraPtr domain, AlgebraPtr codomain, std::vector<int> sigma,
                                std::vector<MonotoneBijection> maps, std::optional<EngagedPart> linear) {
    OrderIsoForm f;
    f.domain_ = std::move(domain);
    f.codomain_ = std::move(codomain);
    f.domain_dec_ = decompose(f.domain_);
    f.codomain_dec_ = same_algebra(f.domain_, f.codomain_) ? f.domain_dec_ : decompose(f.codomain_);
    f.sigma_ = std::move(sigma);
    f.maps_ = std::move(maps);
    f.linear_ = std::move(linear);
    f.validate();
    return f;
}

OrderIsoForm OrderIsoForm::make(std::shared_ptr<const Decomposition> domain_dec,
                                std::shared_ptr<const Decomposition> codomain_dec, std::vector<int> sigma,
                                std::vector<MonotoneBijection> maps, std::optional<EngagedPart> linear) {
    OrderIsoForm f;
    f.domain_ = domain_dec->algebra;
    f.codomain_ = codomain_dec->algebra;
    f.domain_dec_ = std::move(domain_dec);
    f.codomain_dec_ = std::move(codomain_dec);
    f.sigma_ = std::move(sigma);
    f.maps_ = std::move(maps);
    f.linear_ = std::move(linear);
    f.validate();
    return f;
}

void OrderIsoForm::validate() {
    const Decomposition& dd = *domain_dec_;
    const Decomposition& cd = *codomain_dec_;
    const int n = dd.num_disengaged();
    if (cd.num_disengaged() != n || dd.has_engaged() != cd.has_engaged()) throw AlgebraError(kNotIsomorphic);
    if (static_cast<int>(sigma_.size()) != n) throw AlgebraError("sigma must have one entry per disengaged atom");
    if (static_cast<int>(maps_.size()) != n) throw AlgebraError("f_p must have one entry per disengaged atom");
    std::vector<int> seen(n, 0);
    for (int s : sigma_) {
        if (s < 0 || s >= n || seen[s]++) throw AlgebraError("sigma is not a bijection");
    }

    if (dd.has_engaged() != linear_.has_value())
        throw AlgebraError(dd.has_engaged() ? "engaged part requires y and J" : "algebra has no engaged part");
    if (!linear_) {
        engaged_matrix_.resize(0, 0);
        return;
    }
    const EngagedPart& lp = *linear_;
    if (!same_algebra(lp.y.algebra(), cd.engaged)) throw AlgebraError("y must live in the codomain's engaged part");
    if (!same_algebra(lp.jordan.domain(), dd.engaged) || !same_algebra(lp.jordan.codomain(), cd.engaged))
        throw AlgebraError("J must map the engaged parts onto each other");
    if (!(min_eigenvalue(lp.y) > kInteriorTol)) throw AlgebraError("y is not in the interior of the cone");
    if (!is_jordan_isomorphism(lp.jordan)) throw AlgebraError("J is not a Jordan isomorphism");
    engaged_matrix_ = quadratic_rep(lp.y).matrix() * lp.jordan.matrix();
}

OrderIsoForm OrderIsoForm::identity(const AlgebraPtr& a) {
    auto dec = decompose(a);
    std::vector<int> sigma(dec->num_disengaged());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<MonotoneBijection> maps(sigma.size());
    std::optional<EngagedPart> linear;
    if (dec->has_engaged())
        linear = EngagedPart{Element::unit(dec->engaged), LinearOperator::identity(dec->engaged)};
    return make(dec, dec, std::move(sigma), std::move(maps), std::move(linear));
}

LinearOperator OrderIsoForm::engaged_operator() const {
    Matrix m = Matrix::Zero(codomain_->dim(), domain_->dim());
    if (linear_) m = codomain_dec_->embedding * engaged_matrix_ * domain_dec_->embedding.transpose();
    return LinearOperator(domain_, codomain_, std::move(m));
}

Element OrderIsoForm::operator()(const Element& x) const {
    if (!same_algebra(x.algebra(), domain_)) throw AlgebraError("algebra mismatch");
    if (!is_positive(x)) throw AlgebraError("element not in cone");
    Vector out = Vector::Zero(codomain_->dim());
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
        const double xp = domain_dec_->disengaged_coefficient(x, static_cast<int>(i));
        out += maps_[i](xp) * codomain_dec_->disengaged_atoms[sigma_[i]].coords();
    }
    if (linear_) {
        const Vector xe = domain_dec_->embedding.transpose() * x.coords();
        out += codomain_dec_->embedding * (engaged_matrix_ * xe);
    }
    return Element(codomain_, std::move(out));
}

Element apply_order_iso(const OrderIsoForm& f, const Element& x) { return f(x); }

OrderIsoForm invert_order_iso(const OrderIsoForm& f) {
    const int n = static_cast<int>(f.sigma().size());
    std::vector<int> sigma(n);
    std::vector<MonotoneBijection> maps(n);
    for (int i = 0; i < n; ++i) {
        sigma[f.sigma()[i]] = i;
        maps[f.sigma()[i]] = f.maps()[i].inverse();
    }
    std::optional<EngagedPart> linear;
    if (f.linear()) {
        const LinearOperator t(f.domain_decomposition().engaged, f.codomain_decomposition().engaged,
                               f.engaged_matrix());
        auto fac = factorize_linear_order_iso(op_invert(t));
        linear = EngagedPart{std::move(fac.y), std::move(fac.jordan)};
    }
    return OrderIsoForm::make(f.codomain_decomposition_ptr(), f.domain_decomposition_ptr(), std::move(sigma),
                              std::move(maps), std::move(linear));
}

OrderIsoForm compose_order_iso(const OrderIsoForm& outer, const OrderIsoForm& inner) {
    if (!same_algebra(inner.codomain(), outer.domain())) throw AlgebraError("algebra mismatch");
    const int n = static_cast<int>(inner.sigma().size());
    std::vector<int> sigma(n);
    std::vector<MonotoneBijection> maps(n);
    for (int i = 0; i < n; ++i) {
        const int mid = inner.sigma()[i];
        sigma[i] = outer.sigma()[mid];
        maps[i] = outer.maps()[mid].after(inner.maps()[i]);
    }
    std::optional<EngagedPart> linear;
    if (inner.linear()) {
        const LinearOperator t(inner.domain_decomposition().engaged, outer.codomain_decomposition().engaged,
                               outer.engaged_matrix() * inner.engaged_matrix());
        auto fac = factorize_linear_order_iso(t);
        linear = EngagedPart{std::move(fac.y), std::move(fac.jordan)};
    }
    return OrderIsoForm::make(inner.domain_decomposition_ptr(), outer.codomain_decomposition_ptr(), std::move(sigma),
                              std::move(maps), std::move(linear));
}

LinearOperator random_jordan_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, std::uint64_t seed) {
    if (sorted_factors(a) != sorted_factors(b)) throw AlgebraError("algebras do not have matching factors");
    Rng rng(seed);
    std::vector<int> targets(b->num_factors());
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<bool> used(b->num_factors(), false);

    Matrix m = Matrix::Zero(b->dim(), a->dim());
    for (int i = 0; i < a->num_factors(); ++i) {
        const FactorDescriptor& fd = a->factor(i);
        int target = -1;
        for (int t : targets) {
            if (!used[t] && b->factor(t) == fd) {
                target = t;
                break;
            }
        }
        used[target] = true;
        m.block(b->offset(target), a->offset(i), fd.dim(), fd.dim()) = factor_automorphism(fd, rng);
    }
    return LinearOperator(a, b, std::move(m));
}

LinearOperator random_jordan_automorphism(const AlgebraPtr& a, std::uint64_t seed) {
    return random_jordan_isomorphism(a, a, seed);
}

OrderIsoForm random_order_iso(const AlgebraPtr& a, const AlgebraPtr& b, std::uint64_t seed, bool allow_nonlinear) {
    auto da = decompose(a);
    auto db = same_algebra(a, b) ? da : decompose(b);
    if (da->num_disengaged() != db->num_disengaged() || sorted_factors(da->engaged) != sorted_factors(db->engaged))
        throw AlgebraError(kNotIsomorphic);

    Rng rng(seed);
    const int n = da->num_disengaged();
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);

    std::uniform_real_distribution<double> exponent(0.3, 3.0);
    std::vector<MonotoneBijection> maps;
    for (int i = 0; i < n; ++i) {
        const double alpha = exponent(rng);
        maps.push_back(MonotoneBijection::power(allow_nonlinear ? alpha : 1.0));
    }

    std::optional<EngagedPart> linear;
    if (da->has_engaged()) {
        Element y = random_interior(db->engaged, rng, 0.1);
        LinearOperator j = random_jordan_isomorphism(da->engaged, db->engaged, rng());
        linear = EngagedPart{std::move(y), std::move(j)};
    }
    return OrderIsoForm::make(da, db, std::move(sigma), std::move(maps), std::move(linear));
}

bool check_linearity(const OrderIsoForm& f) {
    return std::all_of(f.maps().begin(), f.maps().end(), [](const auto& m) { return m.is_linear(); });
}

AffineRepresentation affinity_on_translated_cone(const OrderIsoForm& f, const Element& x, std::uint64_t seed,
                                                 int samples) {
    if (f.domain_decomposition().num_disengaged() > 0) throw AlgebraError("domain has disengaged atoms");
    if (!same_algebra(x.algebra(), f.domain())) throw AlgebraError("algebra mismatch");
    if (!is_positive(x)) throw AlgebraError("element not in cone");

    AffineRepresentation rep{f.engaged_operator(), Element::zero(f.codomain()), 0.0};
    rep.offset = f(x) - rep.linear(x);
    for (int k = 0; k < samples; ++k) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
        const Element z = x + random_positive(f.domain(), rng);
        const Element fz = f(z);
        const Element predicted = rep.linear(z) + rep.offset;
        rep.max_residual = std::max(rep.max_residual, order_unit_norm(fz - predicted) / (1.0 + order_unit_norm(fz)));
    }
    if (rep.max_residual > 1e-8) throw AlgebraError("map is not affine on the translated cone");
    return rep;
}

GridPowerDemo grid_power_demo(int n_grid, const std::function<double(double)>& lambda) {
    if (n_grid < 2) throw AlgebraError("grid needs at least two points");
    std::vector<double> grid;
    std::vector<FactorDescriptor> factors;
    std::vector<double> scalar_exponents;
    for (int k = 0; k < n_grid; ++k) {
        const double t = static_cast<double>(k) / (n_grid - 1);
        const double l = lambda(t);
        if (!(l > 0.0) || !std::isfinite(l)) throw AlgebraError("λ must be strictly positive on the grid");
        grid.push_back(t);
        if (t <= 0.5) {
            factors.push_back(FactorDescriptor::real());
            factors.push_back(FactorDescriptor::real());
            scalar_exponents.push_back(l);
            scalar_exponents.push_back(l);
        } else if (l != 1.0) {
            throw AlgebraError("λ must be 1 on engaged blocks");
        }
    }
    for (int k = 0; k < n_grid; ++k)
        if (grid[k] > 0.5) factors.push_back(FactorDescriptor::sym(2));

    const AlgebraPtr a = Algebra::make(factors);
    auto dec = decompose(a);
    // Scalar factors come first, so disengaged atom i is coordinate i.
    std::vector<int> sigma(dec->num_disengaged());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<MonotoneBijection> maps;
    for (int i = 0; i < dec->num_disengaged(); ++i)
        maps.push_back(MonotoneBijection::power(scalar_exponents[dec->disengaged_coordinates[i]]));
    std::optional<EngagedPart> linear;
    if (dec->has_engaged())
        linear = EngagedPart{Element::unit(dec->engaged), LinearOperator::identity(dec->engaged)};
    return {std::move(grid), OrderIsoForm::make(dec, dec, std::move(sigma), std::move(maps), std::move(linear))};
}

}  // namespace jordan
