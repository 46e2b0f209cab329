#include <doctest.h>

#include "helpers.hpp"
#include "jordan/structure.hpp"

using namespace jordan;
using namespace jordan::testing;

namespace {

std::vector<AlgebraPtr> sample_algebras() {
    using F = FactorDescriptor;
    return {real(),
            sym(3),
            spin(3),
            sum({F::real(), F::real()}),
            sum({F::real(), F::sym(2)}),
            sum({F::real(), F::real(), F::sym(3)}),
            sum({F::spin(2), F::real(), F::sym(2), F::real()})};
}

}  // namespace

TEST_CASE("is_projection examples") {
    CHECK(is_projection(Element::unit(sym(3))));
    CHECK_FALSE(is_projection(0.5 * Element::unit(sym(2))));
    CHECK(is_projection(elem(spin(2), {0.5, 0.5, 0})));
    CHECK(is_projection(Element::zero(sym(2))));
}

TEST_CASE("is_atom examples") {
    CHECK(is_atom(elem(sym(3), {1, 0, 0, 0, 0, 0})));
    CHECK_FALSE(is_atom(elem(sym(3), {1, 0, 0, 1, 0, 0})));
    const auto a = sum({FactorDescriptor::real(), FactorDescriptor::sym(2)});
    CHECK(is_atom(Element::factor_unit(a, 0)));
    CHECK_FALSE(is_atom(Element::zero(a)));
    CHECK_FALSE(is_atom(Element::unit(spin(3))));
    CHECK(is_atom(elem(spin(3), {0.5, 0, 0.5, 0})));
}

TEST_CASE("is_central examples") {
    CHECK(is_central(Element::unit(sym(3))));
    CHECK_FALSE(is_central(elem(sym(2), {1, 0, 0})));
    const auto a = sum({FactorDescriptor::real(), FactorDescriptor::sym(2)});
    CHECK(is_central(Element::factor_unit(a, 0)));
    CHECK(is_central(Element::factor_unit(a, 1)));
}

TEST_CASE("center_basis examples") {
    CHECK(center_basis(sym(3)).size() == 1);
    CHECK(center_basis(sum({FactorDescriptor::real(), FactorDescriptor::real()})).size() == 2);
    CHECK(center_basis(sum({FactorDescriptor::real(), FactorDescriptor::sym(2)})).size() == 2);
    CHECK(center_basis(spin(5)).size() == 1);
}

TEST_CASE("minimal_central_idempotents examples") {
    SUBCASE("Sym(3)") {
        const auto ps = minimal_central_idempotents(sym(3));
        REQUIRE(ps.size() == 1);
        CHECK(gap(ps[0], Element::unit(sym(3))) < 1e-10);
    }
    SUBCASE("Spin(3)") {
        const auto ps = minimal_central_idempotents(spin(3));
        REQUIRE(ps.size() == 1);
        CHECK(gap(ps[0], Element::unit(spin(3))) < 1e-10);
    }
    SUBCASE("Real ⊕ Real ⊕ Sym(2)") {
        const auto a = sum({FactorDescriptor::real(), FactorDescriptor::real(), FactorDescriptor::sym(2)});
        const auto ps = minimal_central_idempotents(a);
        REQUIRE(ps.size() == 3);
        for (int f = 0; f < 3; ++f) {
            const Element u = Element::factor_unit(a, f);
            CHECK(std::any_of(ps.begin(), ps.end(), [&](const Element& p) { return gap(p, u) < 1e-10; }));
        }
    }
}

TEST_CASE("decompose_engaged_disengaged examples") {
    SUBCASE("Real ⊕ Real ⊕ Sym(3)") {
        const auto a = sum({FactorDescriptor::real(), FactorDescriptor::real(), FactorDescriptor::sym(3)});
        const auto d = decompose_engaged_disengaged(a);
        CHECK(d.num_disengaged() == 2);
        CHECK(gap(d.p_D, Element::factor_unit(a, 0) + Element::factor_unit(a, 1)) < 1e-10);
        REQUIRE(d.has_engaged());
        CHECK(d.engaged->factors() == std::vector<FactorDescriptor>{FactorDescriptor::sym(3)});
        CHECK(d.engaged_factors == std::vector<int>{2});
    }
    SUBCASE("Sym(4)") {
        const auto d = decompose_engaged_disengaged(sym(4));
        CHECK(d.num_disengaged() == 0);
        CHECK(gap(d.p_D, Element::zero(sym(4))) < 1e-10);
        CHECK(d.has_engaged());
    }
    SUBCASE("Real") {
        const auto d = decompose_engaged_disengaged(real());
        CHECK(d.num_disengaged() == 1);
        CHECK(gap(d.p_D, Element::unit(real())) < 1e-10);
        CHECK_FALSE(d.has_engaged());
    }
}

TEST_CASE("codim1_ideals examples") {
    const auto a = sum({FactorDescriptor::real(), FactorDescriptor::sym(2)});
    const auto ideals = codim1_ideals(a);
    REQUIRE(ideals.size() == 1);
    CHECK(ideals[0](elem(a, {7, 1, 2, 3})) == doctest::Approx(7.0));
    CHECK(codim1_ideals(sym(3)).empty());
    CHECK(codim1_ideals(sum({FactorDescriptor::real(), FactorDescriptor::real()})).size() == 2);
}

TEST_CASE("decomposition invariants") {
    for (const auto& a : sample_algebras()) {
        CAPTURE(a->name());
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const auto d = decompose_engaged_disengaged(a, seed);
            CHECK(same_decomposition(d, decompose_by_factor_dimension(a)));
            CHECK(is_projection(d.p_D));
            CHECK(is_central(d.p_D));
            CHECK(gap(d.p_D + d.p_E, Element::unit(a)) < 1e-10);
            CHECK(are_orthogonal(d.p_D, d.p_E));
            for (const auto& p : d.disengaged_atoms) {
                CHECK(is_atom(p));
                CHECK(is_central(p));
            }

            // Every element splits into its disengaged coefficients and engaged part.
            Rng rng = trial_rng(31, seed);
            const Element x = random_element(a, rng);
            Element rebuilt = Element::zero(a);
            for (int i = 0; i < d.num_disengaged(); ++i) rebuilt += d.disengaged_coefficient(x, i) * d.disengaged_atoms[i];
            if (d.has_engaged()) {
                const Element xe = d.restrict_engaged(x);
                rebuilt += d.embed_engaged(xe);
                // The engaged embedding is a Jordan homomorphism.
                const Element ye = d.restrict_engaged(random_element(a, rng));
                CHECK(gap(d.embed_engaged(jordan_product(xe, ye)),
                          jordan_product(d.embed_engaged(xe), d.embed_engaged(ye))) < 1e-12);
            }
            CHECK(gap(rebuilt, x) < 1e-12);

            // The codimension-one functionals are the disengaged coefficients and are multiplicative.
            const auto ideals = codim1_ideals(a, seed);
            CHECK(static_cast<int>(ideals.size()) == d.num_disengaged());
            const Element y = random_element(a, rng);
            for (const auto& ideal : ideals)
                CHECK(ideal(jordan_product(x, y)) == doctest::Approx(ideal(x) * ideal(y)).epsilon(1e-9));
        }
    }
}

TEST_CASE("an atom is central exactly when it is orthogonal to every other atom") {
    for (const auto& a : sample_algebras()) {
        CAPTURE(a->name());
        // Atoms drawn from frames of random elements.
        std::vector<Element> atoms;
        for (int k = 0; k < 20; ++k) {
            Rng rng = trial_rng(41, k);
            for (const auto& t : atomic_refinement(spectral_decomposition(random_element(a, rng))))
                atoms.push_back(t.atom);
        }
        for (const auto& p : atoms) {
            REQUIRE(is_atom(p));
            bool orthogonal_to_others = true;
            for (const auto& q : atoms)
                if (gap(p, q) > 1e-8 && !are_orthogonal(p, q, 1e-8)) orthogonal_to_others = false;
            CHECK(is_central(p) == orthogonal_to_others);
        }
    }
}

TEST_CASE("numerical_rank") {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = 1e-12;
    CHECK(numerical_rank(m) == 3);
    CHECK(numerical_rank(Matrix::Zero(3, 3)) == 0);
}
