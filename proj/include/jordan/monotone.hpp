#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace jordan {

/// t ↦ t^α on [0, ∞), α > 0.
struct PowerMap {
    double alpha = 1.0;
    friend bool operator==(const PowerMap&, const PowerMap&) = default;
};

/// Increasing interpolation through breakpoints (t, f(t)) starting at
/// (0, 0); the last slope extends to infinity.
struct PiecewiseLinearMap {
    std::vector<std::pair<double, double>> points;
    friend bool operator==(const PiecewiseLinearMap&, const PiecewiseLinearMap&) = default;
};

using MonotoneStage = std::variant<PowerMap, PiecewiseLinearMap>;

/// Strictly increasing bijection of the half-line fixing 0. Stored as a
/// chain of catalog maps applied left to right, so that compositions and
/// inverses of catalog maps stay representable.
class MonotoneBijection {
public:
    MonotoneBijection() = default;  // identity

    static MonotoneBijection power(double alpha);
    /// Breakpoints with strictly increasing t and f(t); (0,0) is prepended
    /// when missing.
    static MonotoneBijection piecewise_linear(std::vector<std::pair<double, double>> points);
    static MonotoneBijection from_stages(std::vector<MonotoneStage> stages);

    double operator()(double t) const;
    MonotoneBijection inverse() const;
    /// (*this ∘ inner)(t) = (*this)(inner(t)).
    MonotoneBijection after(const MonotoneBijection& inner) const;

    /// f(t) = c·t for some c > 0.
    bool is_linear(double tol = 1e-12) const;
    bool is_identity(double tol = 1e-12) const;

    const std::vector<MonotoneStage>& stages() const { return stages_; }

    friend bool operator==(const MonotoneBijection&, const MonotoneBijection&) = default;

private:
    void simplify();

    std::vector<MonotoneStage> stages_;  // empty = identity
};

}  // namespace jordan
