#include <doctest.h>

#include "helpers.hpp"
#include "jordan/structure.hpp"
#include "jordan/verify.hpp"

using namespace jordan;
using namespace jordan::testing;

TEST_CASE("extreme_vector_oracle examples") {
    CHECK(extreme_vector_oracle(elem(sym(2), {1, 0, 0}), 10000, 0));
    CHECK_FALSE(extreme_vector_oracle(Element::unit(sym(2)), 10000, 0));
    const auto a = sum({FactorDescriptor::real(), FactorDescriptor::sym(2)});
    CHECK(extreme_vector_oracle(Element::factor_unit(a, 0), 10000, 0));
    CHECK_THROWS_AS(extreme_vector_oracle(elem(sym(2), {2, 0, 0}), 10, 0), AlgebraError);
    CHECK_THROWS_AS(extreme_vector_oracle(elem(sym(2), {1, 0, -1}), 10, 0), AlgebraError);
}

TEST_CASE("extreme_vector_oracle agrees with is_atom on frames") {
    using F = FactorDescriptor;
    for (const auto& a : {sym(3), spin(4), sum({F::real(), F::spin(2), F::sym(2)})}) {
        CAPTURE(a->name());
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Rng rng = trial_rng(51, seed);
            const auto atoms = atomic_refinement(spectral_decomposition(random_element(a, rng)));
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                const Element& p = atoms[i].atom;
                CHECK(extreme_vector_oracle(p, 1000, seed) == is_atom(p));
                const Element q = p + atoms[(i + 1) % atoms.size()].atom;
                if (is_projection(q)) CHECK(extreme_vector_oracle(q, 1000, seed) == is_atom(q));
            }
        }
    }
}

TEST_CASE("check_order_preserving") {
    const auto s2 = sym(2);
    SUBCASE("identity passes") {
        const auto r = check_order_preserving([](const Element& x) { return x; }, s2, 1000, 0);
        CHECK(r.passed());
        CHECK(r.trials == 1000);
    }
    SUBCASE("squaring on Sym(2) is flagged") {
        const auto r = check_order_preserving([](const Element& x) { return square(x); }, s2, 1000, 0);
        CHECK_FALSE(r.passed());
        CHECK(r.failure_count > 0);
        CHECK(r.failures.size() <= static_cast<std::size_t>(kKeptFailures));
        CHECK(r.max_violation > kOrderTol);
    }
    SUBCASE("coordinate squaring on Real ⊕ Real passes") {
        const auto rr = sum({FactorDescriptor::real(), FactorDescriptor::real()});
        CHECK(check_order_preserving([](const Element& x) { return square(x); }, rr, 1000, 0).passed());
    }
}

TEST_CASE("check_linearity_blackbox") {
    const auto a = sum({FactorDescriptor::sym(2), FactorDescriptor::spin(3)});
    Rng rng(52);
    const LinearOperator uy = quadratic_rep(random_interior(a, rng));
    CHECK(check_linearity_blackbox([&](const Element& x) { return op_apply(uy, x); }, a, 500, 0).passed());
    const auto r = check_linearity_blackbox([](const Element& x) { return square(x); }, a, 100, 0);
    CHECK_FALSE(r.passed());
    CHECK(r.max_violation > 1e-3);
}

TEST_CASE("reports merge associatively and trials depend only on (seed, index)") {
    const auto a = sym(2);
    const ConeMap sq = [](const Element& x) { return square(x); };
    const auto whole = check_order_preserving(sq, a, 400, 3);
    auto merged = check_order_preserving(sq, a, 400, 3);
    merged.merge(SampleReport{});
    CHECK(merged.failure_count == whole.failure_count);
    CHECK(merged.max_violation == whole.max_violation);

    SampleReport left, right;
    left.trials = 2;
    left.max_violation = 0.5;
    left.failure_count = 1;
    right.trials = 3;
    right.max_violation = 0.25;
    left.merge(right);
    CHECK(left.trials == 5);
    CHECK(left.max_violation == 0.5);
    CHECK(left.failure_count == 1);

    const auto again = check_order_preserving(sq, a, 400, 3);
    CHECK(again.failure_count == whole.failure_count);
    CHECK(again.max_violation == whole.max_violation);
}

TEST_CASE("homogeneity_witness") {
    const auto a = sum({FactorDescriptor::real(), FactorDescriptor::real()});
    const auto w = homogeneity_witness([](const Element& x) { return square(x); }, Element::unit(a), 2.0);
    CHECK(w.gap > 1.0);
    CHECK(gap(w.f_of_scaled, elem(a, {4, 4})) == 0.0);
    CHECK(gap(w.scaled_f, elem(a, {2, 2})) == 0.0);
}
