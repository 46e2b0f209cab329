#include "jordan/random.hpp"

namespace jordan {

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    Rng outer(seed);
    Rng inner(outer() ^ (index * 0xd1b54a32d192ed03ULL));
    return Rng(inner());
}

Element random_element(const AlgebraPtr& a, Rng& rng) {
    std::normal_distribution<double> gauss;
    Vector v(a->dim());
    for (int k = 0; k < a->dim(); ++k) v[k] = gauss(rng);
    return Element(a, std::move(v));
}

Element random_positive(const AlgebraPtr& a, Rng& rng) { return square(random_element(a, rng)); }

Element random_interior(const AlgebraPtr& a, Rng& rng, double shift) {
    return random_positive(a, rng) + shift * Element::unit(a);
}

Element random_unit_interval(const AlgebraPtr& a, Rng& rng) {
    // ‖w²‖ = ‖w‖² ≤ <w,w> under the trace form, so w²/<w,w> ≤ e.
    const Element w = random_element(a, rng);
    const double t = inner_product(w, w);
    return t > 0.0 ? (1.0 / t) * square(w) : Element::zero(a);
}

Matrix random_orthogonal(int n, Rng& rng) {
    std::normal_distribution<double> gauss;
    Matrix g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) *= -1.0;
    return q;
}

}  // namespace jordan
