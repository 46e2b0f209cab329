#pragma once

#include <initializer_list>

#include "jordan/algebra.hpp"
#include "jordan/random.hpp"
#include "jordan/spectral.hpp"

namespace jordan::testing {

inline AlgebraPtr real() { return Algebra::make({FactorDescriptor::real()}); }
inline AlgebraPtr spin(int n) { return Algebra::make({FactorDescriptor::spin(n)}); }
inline AlgebraPtr sym(int n) { return Algebra::make({FactorDescriptor::sym(n)}); }
inline AlgebraPtr sum(std::initializer_list<FactorDescriptor> f) { return Algebra::make(f); }

inline Element elem(const AlgebraPtr& a, std::initializer_list<double> c) {
    Vector v(static_cast<Eigen::Index>(c.size()));
    int k = 0;
    for (double x : c) v[k++] = x;
    return Element(a, v);
}

inline double gap(const Element& x, const Element& y) { return (x.coords() - y.coords()).cwiseAbs().maxCoeff(); }
inline double gap(const Matrix& x, const Matrix& y) { return (x - y).cwiseAbs().maxCoeff(); }

}  // namespace jordan::testing
