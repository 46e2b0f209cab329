#pragma once

// Sampling oracles that check the library against first principles.
// Trial k of a run seeded with s draws only from trial_rng(s, k), so runs
// can be split across threads and reports merged in any order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

using ConeMap = std::function<Element(const Element&)>;

struct SampleFailure {
    std::vector<Element> inputs;
    std::string predicate;
    double magnitude = 0.0;
};

struct SampleReport {
    int trials = 0;
    double tolerance = 0.0;
    double max_violation = 0.0;
    int failure_count = 0;
    /// First few failures; failure_count holds the total.
    std::vector<SampleFailure> failures;

    bool passed() const { return failure_count == 0; }
    void record(SampleFailure f);
    void merge(const SampleReport& other);
};

inline constexpr int kKeptFailures = 8;
inline constexpr double kOrderTol = 1e-9;
inline constexpr double kLinearityTol = 1e-8;

/// Refutation oracle for extremality of a normalized cone element x: draws
/// y = U_{x^{1/2}} w ∈ [0, x] with w ∈ [0, e] and returns false as soon as
/// y leaves span{x} by more than 1e-7. Independent of is_atom.
bool extreme_vector_oracle(const Element& x, int trials, std::uint64_t seed);

/// f(x) ≤ f(x + w²) on random cone pairs; violation is the negative part of
/// the smallest eigenvalue of the difference.
SampleReport check_order_preserving(const ConeMap& f, const AlgebraPtr& domain, int trials, std::uint64_t seed,
                                    double tol = kOrderTol);

/// Additivity f(x+z) = f(x)+f(z) and homogeneity f(αx) = αf(x),
/// α ∈ {½, 2, 3}, on random cone points. Violations are measured relative
/// to 1 + ‖expected‖.
SampleReport check_linearity_blackbox(const ConeMap& f, const AlgebraPtr& domain, int trials, std::uint64_t seed,
                                      double tol = kLinearityTol);

/// f(αx) against αf(x) at a single point.
struct HomogeneityWitness {
    Element x;
    double alpha;
    Element f_of_scaled;  // f(αx)
    Element scaled_f;     // αf(x)
    double gap;           // ‖f(αx) − αf(x)‖
};

HomogeneityWitness homogeneity_witness(const ConeMap& f, const Element& x, double alpha);

}  // namespace jordan
