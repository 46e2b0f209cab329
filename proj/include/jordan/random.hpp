#pragma once

#include <cstdint>
#include <random>

#include "jordan/algebra.hpp"

namespace jordan {

/// splitmix64: a 64-bit generator whose state is a single counter, so a
/// fresh stream per (seed, trial) costs nothing to set up.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Generator for trial `index` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Coordinates drawn i.i.d. from N(0, 1).
Element random_element(const AlgebraPtr& a, Rng& rng);
/// w² for a random w: a point of the cone.
Element random_positive(const AlgebraPtr& a, Rng& rng);
/// w² + shift·e: a point of the cone interior.
Element random_interior(const AlgebraPtr& a, Rng& rng, double shift = 0.1);
/// A point of the order interval [0, e].
Element random_unit_interval(const AlgebraPtr& a, Rng& rng);

/// Haar-distributed orthogonal matrix.
Matrix random_orthogonal(int n, Rng& rng);

}  // namespace jordan
