#include "jordan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "jordan/jacobi.hpp"

namespace jordan {

namespace {

Element embed_block(const AlgebraPtr& a, int factor, const Vector& block) {
    Vector v = Vector::Zero(a->dim());
    v.segment(a->offset(factor), block.size()) = block;
    return Element(a, std::move(v));
}

// Eigenvalue/atom pairs of every factor, unsorted.
std::vector<AtomTerm> raw_atoms(const Element& x) {
    const AlgebraPtr& a = x.algebra();
    std::vector<AtomTerm> out;
    for (int f = 0; f < a->num_factors(); ++f) {
        const FactorDescriptor& fd = a->factor(f);
        const Vector b = x.block(f);
        switch (fd.kind) {
            case FactorKind::Real:
                out.push_back({b[0], Element::factor_unit(a, f)});
                break;
            case FactorKind::Spin: {
                const Vector u = b.tail(fd.n);
                const double r = u.norm();
                Vector w = Vector::Zero(fd.n);
                if (r > 0.0) w = u / r;
                else w[0] = 1.0;
                Vector plus(fd.n + 1), minus(fd.n + 1);
                plus << 0.5, 0.5 * w;
                minus << 0.5, -0.5 * w;
                out.push_back({b[0] + r, embed_block(a, f, plus)});
                out.push_back({b[0] - r, embed_block(a, f, minus)});
                break;
            }
            case FactorKind::Sym: {
                const SymmetricEigen eig = jacobi_eigen(sym_to_matrix(b, fd.n));
                for (int k = 0; k < fd.n; ++k) {
                    const Vector v = eig.vectors.col(k);
                    out.push_back({eig.values[k], embed_block(a, f, matrix_to_sym(v * v.transpose()))});
                }
                break;
            }
        }
    }
    return out;
}

std::vector<AtomTerm> sorted_atoms(const Element& x) {
    auto atoms = raw_atoms(x);
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const AtomTerm& l, const AtomTerm& r) { return l.eigenvalue > r.eigenvalue; });
    return atoms;
}

[[noreturn]] void domain_error(double lambda) {
    std::ostringstream os;
    os.precision(17);
    os << "eigenvalue outside domain of φ: " << lambda;
    throw AlgebraError(os.str());
}

}  // namespace

Element SpectralDecomposition::reconstruct() const {
    Element x = Element::zero(algebra);
    for (std::size_t i = 0; i < idempotents.size(); ++i) x += eigenvalues[i] * idempotents[i];
    return x;
}

SpectralDecomposition spectral_decomposition(const Element& x) {
    const auto atoms = sorted_atoms(x);
    double norm = 0.0;
    for (const auto& t : atoms) norm = std::max(norm, std::abs(t.eigenvalue));
    const double tol = kClusterTol * (1.0 + norm);

    SpectralDecomposition d;
    d.algebra = x.algebra();
    std::size_t i = 0;
    while (i < atoms.size()) {
        std::size_t j = i + 1;
        while (j < atoms.size() && atoms[j - 1].eigenvalue - atoms[j].eigenvalue <= tol) ++j;
        Element p = atoms[i].atom;
        double sum = atoms[i].eigenvalue;
        for (std::size_t k = i + 1; k < j; ++k) {
            p += atoms[k].atom;
            sum += atoms[k].eigenvalue;
        }
        d.eigenvalues.push_back(sum / static_cast<double>(j - i));
        d.idempotents.push_back(std::move(p));
        i = j;
    }
    return d;
}

std::vector<double> spectrum(const Element& x) {
    std::vector<double> out;
    for (const auto& t : sorted_atoms(x)) out.push_back(t.eigenvalue);
    return out;
}

double min_eigenvalue(const Element& x) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& t : raw_atoms(x)) m = std::min(m, t.eigenvalue);
    return m;
}

bool is_positive(const Element& x) { return min_eigenvalue(x) >= -kPositivityTol; }

double order_unit_norm(const Element& x) {
    double m = 0.0;
    for (const auto& t : raw_atoms(x)) m = std::max(m, std::abs(t.eigenvalue));
    return m;
}

Element functional_calculus(const SpectralDecomposition& d, const std::function<double(double)>& phi) {
    Element out = Element::zero(d.algebra);
    for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
        const double v = phi(d.eigenvalues[i]);
        if (!std::isfinite(v)) domain_error(d.eigenvalues[i]);
        out += v * d.idempotents[i];
    }
    return out;
}

Element functional_calculus(const Element& x, const std::function<double(double)>& phi) {
    return functional_calculus(spectral_decomposition(x), phi);
}

Element sqrt(const Element& x) {
    const auto d = spectral_decomposition(x);
    for (double l : d.eigenvalues)
        if (l < -kPositivityTol) domain_error(l);
    return functional_calculus(d, [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

Element inverse(const Element& x) {
    const auto d = spectral_decomposition(x);
    for (double l : d.eigenvalues)
        if (std::abs(l) <= kInverseTol) domain_error(l);
    return functional_calculus(d, [](double l) { return 1.0 / l; });
}

Element pow(const Element& x, double alpha) {
    const auto d = spectral_decomposition(x);
    const bool integer = alpha == std::round(alpha);
    for (double l : d.eigenvalues) {
        if (alpha < 0 && std::abs(l) <= kInverseTol) domain_error(l);
        if (!integer && l < -kPositivityTol) domain_error(l);
    }
    if (integer)
        return functional_calculus(d, [alpha](double l) { return std::pow(l, alpha); });
    return functional_calculus(d, [alpha](double l) {
        const double t = std::max(l, 0.0);
        return t == 0.0 ? 0.0 : std::pow(t, alpha);
    });
}

std::vector<Element> split_into_atoms(const Element& p) {
    const AlgebraPtr& a = p.algebra();
    std::vector<Element> out;
    for (int f = 0; f < a->num_factors(); ++f) {
        const FactorDescriptor& fd = a->factor(f);
        const Vector b = p.block(f);
        switch (fd.kind) {
            case FactorKind::Real:
                if (b[0] > 0.5) out.push_back(Element::factor_unit(a, f));
                break;
            case FactorKind::Spin: {
                if (b[0] > 0.75) {
                    // Whole factor unit: split along the first direction.
                    Vector plus = Vector::Zero(fd.n + 1), minus = Vector::Zero(fd.n + 1);
                    plus[0] = minus[0] = 0.5;
                    plus[1] = 0.5;
                    minus[1] = -0.5;
                    out.push_back(embed_block(a, f, plus));
                    out.push_back(embed_block(a, f, minus));
                } else if (b[0] > 0.25) {
                    out.push_back(embed_block(a, f, b));
                }
                break;
            }
            case FactorKind::Sym: {
                const SymmetricEigen eig = jacobi_eigen(sym_to_matrix(b, fd.n));
                for (int k = 0; k < fd.n; ++k) {
                    if (eig.values[k] <= 0.5) continue;
                    const Vector v = eig.vectors.col(k);
                    out.push_back(embed_block(a, f, matrix_to_sym(v * v.transpose())));
                }
                break;
            }
        }
    }
    return out;
}

std::vector<AtomTerm> atomic_refinement(const SpectralDecomposition& d) {
    std::vector<AtomTerm> out;
    for (std::size_t i = 0; i < d.idempotents.size(); ++i)
        for (auto& atom : split_into_atoms(d.idempotents[i])) out.push_back({d.eigenvalues[i], std::move(atom)});
    return out;
}

int element_rank(const Element& x, double tol) {
    const auto s = spectrum(x);
    double norm = 0.0;
    for (double l : s) norm = std::max(norm, std::abs(l));
    int r = 0;
    for (double l : s)
        if (std::abs(l) > tol * std::max(1.0, norm)) ++r;
    return r;
}

}  // namespace jordan
