#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "jordan/jacobi.hpp"
#include "jordan/structure.hpp"

using namespace jordan;
using namespace jordan::testing;

namespace {

// Independent spectrum: Eigen's solver on Sym blocks, s ± ‖u‖ on Spin blocks.
std::vector<double> reference_spectrum(const Element& x) {
    const auto& a = *x.algebra();
    std::vector<double> out;
    for (int f = 0; f < static_cast<int>(a.factors().size()); ++f) {
        const auto& fd = a.factors()[f];
        const Vector b = x.block(f);
        switch (fd.kind) {
            case FactorKind::Real:
                out.push_back(b[0]);
                break;
            case FactorKind::Spin: {
                const double r = b.tail(b.size() - 1).norm();
                out.push_back(b[0] + r);
                out.push_back(b[0] - r);
                break;
            }
            case FactorKind::Sym: {
                Eigen::SelfAdjointEigenSolver<Matrix> es(sym_to_matrix(b, fd.n));
                for (int i = 0; i < fd.n; ++i) out.push_back(es.eigenvalues()[i]);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

TEST_CASE("jacobi_eigen agrees with Eigen's solver") {
    for (int n : {1, 2, 3, 5, 8}) {
        Rng rng(n);
        std::normal_distribution<double> g;
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m(i, j) = m(j, i) = g(rng);
        const SymmetricEigen je = jacobi_eigen(m);
        Eigen::SelfAdjointEigenSolver<Matrix> es(m);
        for (int i = 0; i < n; ++i) CHECK(je.values[i] == doctest::Approx(es.eigenvalues()[n - 1 - i]).epsilon(1e-12));
        CHECK(gap(je.vectors * je.values.asDiagonal() * je.vectors.transpose(), m) < 1e-12);
    }
}

TEST_CASE("spectral_decomposition examples") {
    SUBCASE("unit") {
        const auto a = sym(3);
        const auto d = spectral_decomposition(Element::unit(a));
        REQUIRE(d.eigenvalues.size() == 1);
        CHECK(d.eigenvalues[0] == doctest::Approx(1.0));
        CHECK(gap(d.idempotents[0], Element::unit(a)) < 1e-14);
    }
    SUBCASE("Spin(2), x = (2,(1,0))") {
        const auto a = spin(2);
        const auto d = spectral_decomposition(elem(a, {2, 1, 0}));
        REQUIRE(d.eigenvalues.size() == 2);
        CHECK(d.eigenvalues[0] == doctest::Approx(3.0));
        CHECK(d.eigenvalues[1] == doctest::Approx(1.0));
        CHECK(gap(d.idempotents[0], elem(a, {0.5, 0.5, 0})) < 1e-14);
        CHECK(gap(d.idempotents[1], elem(a, {0.5, -0.5, 0})) < 1e-14);
    }
    SUBCASE("Sym(2), x = diag(5,-1)") {
        const auto a = sym(2);
        const auto d = spectral_decomposition(elem(a, {5, 0, -1}));
        REQUIRE(d.eigenvalues.size() == 2);
        CHECK(d.eigenvalues[0] == doctest::Approx(5.0));
        CHECK(d.eigenvalues[1] == doctest::Approx(-1.0));
        CHECK(gap(d.idempotents[0], elem(a, {1, 0, 0})) < 1e-14);
        CHECK(gap(d.idempotents[1], elem(a, {0, 0, 1})) < 1e-14);
    }
    SUBCASE("equal eigenvalues across factors are merged") {
        const auto a = sum({FactorDescriptor::real(), FactorDescriptor::sym(2)});
        const auto d = spectral_decomposition(Element::unit(a));
        CHECK(d.eigenvalues.size() == 1);
    }
}

TEST_CASE("spectrum, positivity and norm examples") {
    const auto a = sym(2);
    CHECK(is_positive(Element::unit(a)));
    CHECK(order_unit_norm(elem(a, {5, 0, -1})) == doctest::Approx(5.0));
    CHECK_FALSE(is_positive(elem(a, {5, 0, -1})));
    CHECK(min_eigenvalue(elem(a, {5, 0, -1})) == doctest::Approx(-1.0));
    const auto s = spectrum(Element::unit(sum({FactorDescriptor::real(), FactorDescriptor::spin(3)})));
    CHECK(s == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("functional calculus examples") {
    const auto a = sym(2);
    CHECK(gap(sqrt(Element::unit(a)), Element::unit(a)) < 1e-15);
    CHECK(gap(inverse(elem(a, {2, 0, 4})), elem(a, {0.5, 0, 0.25})) < 1e-15);
    CHECK_THROWS_AS(inverse(elem(a, {1, 0, 0})), AlgebraError);
    CHECK_THROWS_AS(sqrt(elem(a, {1, 0, -1})), AlgebraError);
    CHECK(gap(pow(elem(a, {2, 0, 3}), 2.0), elem(a, {4, 0, 9})) < 1e-13);
    CHECK_THROWS_WITH_AS(functional_calculus(elem(a, {0, 0, 1}), [](double t) { return 1.0 / t; }),
                         doctest::Contains("eigenvalue outside domain"), AlgebraError);
}

TEST_CASE("atomic_refinement examples") {
    SUBCASE("unit of Sym(2)") {
        const auto a = sym(2);
        const auto atoms = atomic_refinement(spectral_decomposition(Element::unit(a)));
        REQUIRE(atoms.size() == 2);
        for (const auto& t : atoms) {
            CHECK(t.eigenvalue == doctest::Approx(1.0));
            CHECK(is_atom(t.atom));
        }
        CHECK(gap(atoms[0].atom + atoms[1].atom, Element::unit(a)) < 1e-14);
        CHECK(are_orthogonal(atoms[0].atom, atoms[1].atom));
    }
    SUBCASE("3·E11 keeps the zero eigenvalue") {
        const auto a = sym(2);
        const auto atoms = atomic_refinement(spectral_decomposition(elem(a, {3, 0, 0})));
        REQUIRE(atoms.size() == 2);
        CHECK(atoms[0].eigenvalue == doctest::Approx(3.0));
        CHECK(gap(atoms[0].atom, elem(a, {1, 0, 0})) < 1e-14);
        CHECK(atoms[1].eigenvalue == doctest::Approx(0.0));
        CHECK(gap(atoms[1].atom, elem(a, {0, 0, 1})) < 1e-14);
    }
    SUBCASE("unit of Spin(3) splits into two atoms") {
        const auto a = spin(3);
        const auto atoms = split_into_atoms(Element::unit(a));
        REQUIRE(atoms.size() == 2);
        CHECK(gap(atoms[0] + atoms[1], Element::unit(a)) < 1e-15);
        CHECK(atoms[0].coords()[0] == doctest::Approx(0.5));
        CHECK(is_atom(atoms[0]));
        CHECK(is_atom(atoms[1]));
    }
    CHECK(element_rank(elem(sym(3), {1, 0, 0, 1, 0, 0})) == 2);
}

TEST_CASE("spectral properties on random samples") {
    const std::vector<AlgebraPtr> kinds{
        real(), spin(4), sym(4),
        sum({FactorDescriptor::real(), FactorDescriptor::spin(3), FactorDescriptor::sym(3)})};
    for (const auto& a : kinds) {
        CAPTURE(a->name());
        for (int k = 0; k < 300; ++k) {
            Rng rng = trial_rng(21, k);
            const Element x = random_element(a, rng);
            const double scale = 1.0 + x.coord_norm();

            const auto d = spectral_decomposition(x);
            REQUIRE(gap(d.reconstruct(), x) <= 1e-9 * scale);
            for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
                REQUIRE(is_projection(d.idempotents[i]));
                for (std::size_t j = i + 1; j < d.idempotents.size(); ++j)
                    REQUIRE(are_orthogonal(d.idempotents[i], d.idempotents[j]));
            }

            const auto ours = spectrum(x);
            const auto ref = reference_spectrum(x);
            REQUIRE(ours.size() == ref.size());
            for (std::size_t i = 0; i < ours.size(); ++i) REQUIRE(std::abs(ours[i] - ref[i]) <= 1e-10 * scale);
            REQUIRE(order_unit_norm(x) == doctest::Approx(std::max(std::abs(ref.front()), std::abs(ref.back()))));

            REQUIRE(is_positive(square(x)));
            const Element p = random_positive(a, rng);
            const Element r = sqrt(p);
            REQUIRE(gap(square(r), p) <= 1e-9 * (1 + p.coord_norm()));

            // Atoms reconstruct x and sum to the unit.
            Element acc = Element::zero(a), units = Element::zero(a);
            for (const auto& t : atomic_refinement(d)) {
                acc += t.eigenvalue * t.atom;
                units += t.atom;
            }
            REQUIRE(gap(acc, x) <= 1e-9 * scale);
            REQUIRE(gap(units, Element::unit(a)) <= 1e-9);
        }
    }
}
