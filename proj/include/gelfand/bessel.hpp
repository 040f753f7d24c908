#pragma once

namespace gelfand {

// J_1 to about 1e-15 absolute: power series for x <= 6, Miller's backward
// recurrence on (6, 25), Hankel's asymptotic expansion from 25 on.
double bessel_j1(double x);

// phi_1(r) = 2 J_1(r) / r with phi_1(0) = 1: the spherical function of
// (C^2 x U(2), U(2)) for the trivial K-type.  Throws InvalidArgument for r < 0.
double phi1(double r);

}  // namespace gelfand
