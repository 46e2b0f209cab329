#include "jordan/monotone.hpp"

#include <algorithm>
#include <cmath>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

double eval_stage(const PowerMap& p, double t) { return t <= 0.0 ? 0.0 : std::pow(t, p.alpha); }

double eval_stage(const PiecewiseLinearMap& m, double t) {
    const auto& pts = m.points;
    // Segment k joins pts[k] and pts[k+1]; the last one extends past the end.
    std::size_t k = 0;
    while (k + 2 < pts.size() && t > pts[k + 1].first) ++k;
    const auto [t0, f0] = pts[k];
    const auto [t1, f1] = pts[k + 1];
    return f0 + (t - t0) * (f1 - f0) / (t1 - t0);
}

double eval(const MonotoneStage& s, double t) {
    return std::visit([t](const auto& m) { return eval_stage(m, t); }, s);
}

MonotoneStage invert_stage(const MonotoneStage& s) {
    if (const auto* p = std::get_if<PowerMap>(&s)) return PowerMap{1.0 / p->alpha};
    PiecewiseLinearMap inv;
    for (const auto& [t, f] : std::get<PiecewiseLinearMap>(s).points) inv.points.emplace_back(f, t);
    return inv;
}

// outer ∘ inner for two piecewise-linear maps.
PiecewiseLinearMap merge(const PiecewiseLinearMap& inner, const PiecewiseLinearMap& outer) {
    std::vector<double> ts;
    for (const auto& [t, f] : inner.points) ts.push_back(t);
    const MonotoneStage inner_inv = invert_stage(inner);
    for (const auto& [t, f] : outer.points) ts.push_back(eval(inner_inv, t));
    std::sort(ts.begin(), ts.end());
    PiecewiseLinearMap out;
    for (double t : ts) {
        if (!out.points.empty() && t - out.points.back().first <= 1e-14 * (1.0 + std::abs(t))) continue;
        out.points.emplace_back(t, eval_stage(outer, eval_stage(inner, t)));
    }
    if (out.points.size() < 2) out.points.emplace_back(1.0, eval_stage(outer, eval_stage(inner, 1.0)));
    return out;
}

bool stage_is_identity(const MonotoneStage& s, double tol) {
    if (const auto* p = std::get_if<PowerMap>(&s)) return std::abs(p->alpha - 1.0) <= tol;
    for (const auto& [t, f] : std::get<PiecewiseLinearMap>(s).points)
        if (std::abs(f - t) > tol * (1.0 + std::abs(t))) return false;
    return true;
}

bool stage_is_linear(const MonotoneStage& s, double tol) {
    if (const auto* p = std::get_if<PowerMap>(&s)) return std::abs(p->alpha - 1.0) <= tol;
    const auto& pts = std::get<PiecewiseLinearMap>(s).points;
    const double slope = (pts[1].second - pts[0].second) / (pts[1].first - pts[0].first);
    for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
        const double sk = (pts[k + 1].second - pts[k].second) / (pts[k + 1].first - pts[k].first);
        if (std::abs(sk - slope) > tol * std::max(1.0, std::abs(slope))) return false;
    }
    return true;
}

}  // namespace

MonotoneBijection MonotoneBijection::power(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw AlgebraError("power exponent must be positive");
    return from_stages({PowerMap{alpha}});
}

MonotoneBijection MonotoneBijection::piecewise_linear(std::vector<std::pair<double, double>> points) {
    if (points.empty() || points.front() != std::pair<double, double>{0.0, 0.0})
        points.insert(points.begin(), {0.0, 0.0});
    if (points.size() < 2) throw AlgebraError("piecewise-linear map needs a breakpoint besides the origin");
    for (std::size_t k = 1; k < points.size(); ++k) {
        if (!(points[k].first > points[k - 1].first) || !(points[k].second > points[k - 1].second))
            throw AlgebraError("piecewise-linear breakpoints must be strictly increasing");
    }
    return from_stages({PiecewiseLinearMap{std::move(points)}});
}

MonotoneBijection MonotoneBijection::from_stages(std::vector<MonotoneStage> stages) {
    MonotoneBijection m;
    m.stages_ = std::move(stages);
    m.simplify();
    return m;
}

void MonotoneBijection::simplify() {
    std::vector<MonotoneStage> out;
    for (auto& s : stages_) {
        if (stage_is_identity(s, 1e-12)) continue;
        if (!out.empty() && out.back().index() == s.index()) {
            if (auto* p = std::get_if<PowerMap>(&out.back())) {
                p->alpha *= std::get<PowerMap>(s).alpha;
            } else {
                out.back() = merge(std::get<PiecewiseLinearMap>(out.back()), std::get<PiecewiseLinearMap>(s));
            }
            if (stage_is_identity(out.back(), 1e-12)) out.pop_back();
            continue;
        }
        out.push_back(std::move(s));
    }
    stages_ = std::move(out);
}

double MonotoneBijection::operator()(double t) const {
    for (const auto& s : stages_) t = eval(s, t);
    return t;
}

MonotoneBijection MonotoneBijection::inverse() const {
    std::vector<MonotoneStage> inv;
    for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) inv.push_back(invert_stage(*it));
    return from_stages(std::move(inv));
}

MonotoneBijection MonotoneBijection::after(const MonotoneBijection& inner) const {
    std::vector<MonotoneStage> chain = inner.stages_;
    chain.insert(chain.end(), stages_.begin(), stages_.end());
    return from_stages(std::move(chain));
}

bool MonotoneBijection::is_linear(double tol) const {
    return std::all_of(stages_.begin(), stages_.end(), [tol](const auto& s) { return stage_is_linear(s, tol); });
}

bool MonotoneBijection::is_identity(double tol) const {
    return std::all_of(stages_.begin(), stages_.end(), [tol](const auto& s) { return stage_is_identity(s, tol); });
}

}  // namespace jordan
