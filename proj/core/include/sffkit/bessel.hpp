#pragma once

namespace sffkit {

// J_1(x), absolute error below 1e-12 for |x| <= 50.
double bessel_j1(double x);

}  // namespace sffkit
