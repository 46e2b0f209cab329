#include "jordan/structure.hpp"

#include "jordan/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "jordan/spectral.hpp"

namespace jordan {

namespace {

constexpr int kMaxCenterDraws = 20;
constexpr double kCenterGap = 1e-6;

std::vector<Matrix> basis_multiplication_ops(const AlgebraPtr& a) {
    std::vector<Matrix> ops;
    ops.reserve(a->dim());
    for (int k = 0; k < a->dim(); ++k) ops.push_back(multiplication_op(Element::basis(a, k)).matrix());
    return ops;
}

int dominant_coordinate(const Element& p) {
    Eigen::Index k = 0;
    p.coords().cwiseAbs().maxCoeff(&k);
    return static_cast<int>(k);
}

Decomposition assemble(const AlgebraPtr& a, std::vector<Element> atoms) {
    std::vector<std::pair<int, Element>> keyed;
    for (auto& p : atoms) keyed.emplace_back(dominant_coordinate(p), std::move(p));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });

    Element p_d = Element::zero(a);
    std::vector<Element> sorted;
    std::vector<int> coords;
    for (auto& [k, p] : keyed) {
        p_d += p;
        coords.push_back(k);
        sorted.push_back(std::move(p));
    }

    std::vector<int> engaged_factors;
    std::vector<FactorDescriptor> engaged_desc;
    for (int f = 0; f < a->num_factors(); ++f) {
        // Simple factors sit either under p_D or orthogonal to it.
        const Element u = Element::factor_unit(a, f);
        if (order_unit_norm(jordan_product(u, p_d)) <= 1e-9) {
            engaged_factors.push_back(f);
            engaged_desc.push_back(a->factor(f));
        }
    }

    Decomposition d{a,
                    p_d,
                    Element::unit(a) - p_d,
                    std::move(sorted),
                    std::move(coords),
                    engaged_factors,
                    nullptr,
                    Matrix()};
    if (!engaged_desc.empty()) {
        d.engaged = Algebra::make(engaged_desc);
        d.embedding = Matrix::Zero(a->dim(), d.engaged->dim());
        for (int i = 0; i < static_cast<int>(engaged_factors.size()); ++i) {
            const int f = engaged_factors[i];
            for (int k = 0; k < a->factor(f).dim(); ++k) d.embedding(a->offset(f) + k, d.engaged->offset(i) + k) = 1.0;
        }
    }
    return d;
}

}  // namespace

bool is_projection(const Element& p) {
    return order_unit_norm(square(p) - p) <= kStructureTol * (1.0 + order_unit_norm(p));
}

int numerical_rank(const Matrix& m, double cutoff) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const Vector& s = svd.singularValues();
    if (s.size() == 0 || s[0] == 0.0) return 0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s[i] > cutoff * s[0]) ++r;
    return r;
}

bool is_atom(const Element& p) {
    if (!is_projection(p)) return false;
    if (order_unit_norm(p) < 0.5) return false;
    return numerical_rank(quadratic_rep(p).matrix()) == 1;
}

bool is_central(const Element& x) {
    const AlgebraPtr& a = x.algebra();
    const Matrix lx = multiplication_op(x).matrix();
    const double scale = 1.0 + lx.cwiseAbs().rowwise().sum().maxCoeff();
    for (const Matrix& lb : basis_multiplication_ops(a)) {
        const Matrix c = lx * lb - lb * lx;
        if (c.cwiseAbs().maxCoeff() > kStructureTol * scale) return false;
    }
    return true;
}

bool are_orthogonal(const Element& p, const Element& q, double tol) {
    return order_unit_norm(jordan_product(p, q)) <= tol * (1.0 + order_unit_norm(p) * order_unit_norm(q));
}

std::vector<Element> center_basis(const AlgebraPtr& a) {
    const int d = a->dim();
    const auto ops = basis_multiplication_ops(a);
    Matrix system(static_cast<Eigen::Index>(d) * d * d, d);
    for (int k = 0; k < d; ++k) {
        for (int j = 0; j < d; ++j) {
            const Matrix c = ops[k] * ops[j] - ops[j] * ops[k];
            system.block(static_cast<Eigen::Index>(j) * d * d, k, d * d, 1) =
                Eigen::Map<const Vector>(c.data(), d * d);
        }
    }
    Eigen::BDCSVD<Matrix> svd(system, Eigen::ComputeThinV);
    const Vector& s = svd.singularValues();
    const Matrix& v = svd.matrixV();
    const double smax = s.size() ? s[0] : 0.0;

    std::vector<Element> basis;
    for (int i = 0; i < d; ++i)
        if (smax == 0.0 || s[i] <= kRankCutoff * smax) basis.emplace_back(a, v.col(i));
    return basis;
}

std::vector<Element> minimal_central_idempotents(const AlgebraPtr& a, std::uint64_t seed) {
    const auto basis = center_basis(a);
    Rng rng(seed);
    std::normal_distribution<double> gauss;
    for (int attempt = 0; attempt < kMaxCenterDraws; ++attempt) {
        Element c = Element::zero(a);
        for (const auto& b : basis) c += gauss(rng) * b;
        const SpectralDecomposition d = spectral_decomposition(c);
        bool degenerate = false;
        for (std::size_t i = 1; i < d.eigenvalues.size(); ++i)
            if (d.eigenvalues[i - 1] - d.eigenvalues[i] < kCenterGap) degenerate = true;
        if (!degenerate) return d.idempotents;
    }
    throw AlgebraError("degenerate center draws exhausted");
}

double Decomposition::disengaged_coefficient(const Element& x, int i) const {
    const int k = disengaged_coordinates[i];
    return x[k] / disengaged_atoms[i][k];
}

Element Decomposition::restrict_engaged(const Element& x) const {
    if (!engaged) throw AlgebraError("algebra has no engaged part");
    if (!same_algebra(x.algebra(), algebra)) throw AlgebraError("algebra mismatch");
    return Element(engaged, embedding.transpose() * x.coords());
}

Element Decomposition::embed_engaged(const Element& x_e) const {
    if (!engaged) throw AlgebraError("algebra has no engaged part");
    if (!same_algebra(x_e.algebra(), engaged)) throw AlgebraError("algebra mismatch");
    return Element(algebra, embedding * x_e.coords());
}

Decomposition decompose_engaged_disengaged(const AlgebraPtr& a, std::uint64_t seed) {
    std::vector<Element> atoms;
    for (auto& c : minimal_central_idempotents(a, seed))
        if (is_atom(c)) atoms.push_back(std::move(c));
    return assemble(a, std::move(atoms));
}

Decomposition decompose_by_factor_dimension(const AlgebraPtr& a) {
    std::vector<Element> atoms;
    for (int f = 0; f < a->num_factors(); ++f)
        if (a->factor(f).dim() == 1) atoms.push_back(Element::factor_unit(a, f));
    return assemble(a, std::move(atoms));
}

bool same_decomposition(const Decomposition& lhs, const Decomposition& rhs, double tol) {
    if (!same_algebra(lhs.algebra, rhs.algebra)) return false;
    if (lhs.disengaged_atoms.size() != rhs.disengaged_atoms.size()) return false;
    if (lhs.engaged_factors != rhs.engaged_factors) return false;
    if (lhs.disengaged_coordinates != rhs.disengaged_coordinates) return false;
    for (std::size_t i = 0; i < lhs.disengaged_atoms.size(); ++i)
        if ((lhs.disengaged_atoms[i].coords() - rhs.disengaged_atoms[i].coords()).cwiseAbs().maxCoeff() > tol)
            return false;
    return (lhs.p_D.coords() - rhs.p_D.coords()).cwiseAbs().maxCoeff() <= tol;
}

std::vector<CodimOneIdeal> codim1_ideals(const AlgebraPtr& a, std::uint64_t seed) {
    const Decomposition d = decompose_engaged_disengaged(a, seed);
    std::vector<CodimOneIdeal> out;
    for (int i = 0; i < d.num_disengaged(); ++i) {
        const Element& p = d.disengaged_atoms[i];
        const int k = d.disengaged_coordinates[i];
        const Matrix u = quadratic_rep(p).matrix();
        out.push_back({p, u.row(k) / p[k]});
    }
    return out;
}

}  // namespace jordan
