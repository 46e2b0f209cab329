#include "jordan/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "jordan/random.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

namespace {

constexpr double kSpanTol = 1e-7;

double relative_gap(const Element& got, const Element& expected) {
    return order_unit_norm(got - expected) / (1.0 + order_unit_norm(expected));
}

}  // namespace

void SampleReport::record(SampleFailure f) {
    ++failure_count;
    max_violation = std::max(max_violation, f.magnitude);
    if (static_cast<int>(failures.size()) < kKeptFailures) failures.push_back(std::move(f));
}

void SampleReport::merge(const SampleReport& other) {
    trials += other.trials;
    tolerance = std::max(tolerance, other.tolerance);
    max_violation = std::max(max_violation, other.max_violation);
    failure_count += other.failure_count;
    for (const auto& f : other.failures)
        if (static_cast<int>(failures.size()) < kKeptFailures) failures.push_back(f);
}

bool extreme_vector_oracle(const Element& x, int trials, std::uint64_t seed) {
    if (!is_positive(x)) throw AlgebraError("element not in cone");
    if (std::abs(order_unit_norm(x) - 1.0) > 1e-9) throw AlgebraError("element must have norm 1");

    const AlgebraPtr& a = x.algebra();
    const int d = a->dim();
    const int pool_size = d + 2;

    // Pool of points in [0, e]; trial k draws w = s·Σ tᵢ fᵢ with tᵢ ≥ 0, Σ tᵢ = 1 and
    // s ∈ [0, 1], which stays in [0, e] by convexity.
    Matrix pool(d, pool_size);
    Rng pool_rng = trial_rng(seed, ~std::uint64_t{0});
    for (int i = 0; i < pool_size; ++i) pool.col(i) = random_unit_interval(a, pool_rng).coords();

    // y = U_{x^{1/2}} w and its distance to span{x}, folded into one matrix.
    Matrix gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int k = i; k < d; ++k)
            gram(i, k) = gram(k, i) = inner_product(Element::basis(a, i), Element::basis(a, k));
    const Vector gx = gram * x.coords();
    const Matrix off_span = Matrix::Identity(d, d) - x.coords() * gx.transpose() / x.coords().dot(gx);
    const Matrix residual = off_span * quadratic_rep(sqrt(x)).matrix() * pool;

    // 53 random bits to a double in [0, 1).
    auto unif = [](Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    Vector t(pool_size);
    for (int k = 0; k < trials; ++k) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
        for (int i = 0; i < pool_size; ++i) t[i] = unif(rng);
        const double total = t.sum();
        if (total == 0.0) continue;
        const double scale = unif(rng) / total;
        if (scale * (residual * t).norm() > kSpanTol) return false;
    }
    return true;
}

SampleReport check_order_preserving(const ConeMap& f, const AlgebraPtr& domain, int trials, std::uint64_t seed,
                                    double tol) {
    SampleReport report;
    report.tolerance = tol;
    for (int k = 0; k < trials; ++k) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
        const Element x = random_positive(domain, rng);
        const Element z = x + random_positive(domain, rng);
        const double gap = min_eigenvalue(f(z) - f(x));
        ++report.trials;
        if (gap < -tol) report.record({{x, z}, "f(x) <= f(x + w^2)", -gap});
        else report.max_violation = std::max(report.max_violation, std::max(0.0, -gap));
    }
    return report;
}

SampleReport check_linearity_blackbox(const ConeMap& f, const AlgebraPtr& domain, int trials, std::uint64_t seed,
                                      double tol) {
    static constexpr std::array<double, 3> kScales{0.5, 2.0, 3.0};
    SampleReport report;
    report.tolerance = tol;
    for (int k = 0; k < trials; ++k) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
        const Element x = random_positive(domain, rng);
        const Element z = random_positive(domain, rng);
        const Element fx = f(x);
        ++report.trials;

        const double additive = relative_gap(f(x + z), fx + f(z));
        if (additive > tol) report.record({{x, z}, "f(x+z) = f(x)+f(z)", additive});
        else report.max_violation = std::max(report.max_violation, additive);

        for (double alpha : kScales) {
            const double homogeneous = relative_gap(f(alpha * x), alpha * fx);
            if (homogeneous > tol)
                report.record({{x}, "f(" + std::to_string(alpha).substr(0, 3) + "x) = " +
                                        std::to_string(alpha).substr(0, 3) + "f(x)",
                               homogeneous});
            else report.max_violation = std::max(report.max_violation, homogeneous);
        }
    }
    return report;
}

HomogeneityWitness homogeneity_witness(const ConeMap& f, const Element& x, double alpha) {
    Element lhs = f(alpha * x);
    Element rhs = alpha * f(x);
    const double gap = order_unit_norm(lhs - rhs);
    return {x, alpha, std::move(lhs), std::move(rhs), gap};
}

}  // namespace jordan
