#pragma once

#include "mclat/codes.hpp"
#include "mclat/poly.hpp"

namespace mclat {

// Jacobi theta null values as q-series on the quarter grid:
// theta3 = 1 + 2 sum q^(j^2), theta2 = 2 sum q^((j+1/2)^2).
QSeries theta3(long precision_quarters);
QSeries theta2(long precision_quarters);

// Eisenstein series in the q = e^(pi i z) convention (exponents 2n) and
// the discriminant form Delta = (E4^3 - E6^2)/1728 with exact division.
QSeries eisenstein_e4(long precision_quarters);
QSeries eisenstein_e6(long precision_quarters);
QSeries delta_series(long precision_quarters);

// Theta series of the Construction A lattice of C, via the weight
// enumerator: each coordinate contributes theta3(q^2) (even lift) or
// theta2(q^2) (odd lift), so theta_L = w_C(theta3(q^2), theta2(q^2)).
QSeries theta_from_code(const BinaryCode& c, long precision_quarters, int cap_dim = 24);

// Independent oracle: enumerates lattice vectors z/sqrt(2) with
// rho(z) in C directly inside the norm box and tallies (z,z)/2.
QSeries theta_direct(const BinaryCode& c, long precision_quarters, int max_length = 12);

// Exact Gram determinant of a basis of the Construction A lattice;
// equals 2^(n-2k), computed (not assumed) by integer elimination.
Rat gram_determinant(const BinaryCode& c);

}  // namespace mclat
