#ifndef EXPPELL_DEPS_HPP
#define EXPPELL_DEPS_HPP

#include <vector>

#include "exppell/poly.hpp"

namespace exppell {

/// Certificate for Q-linear dependence modulo constants and for the
/// integer-combination basis used in the descent.
///
/// relations: rational vectors L with sum_k L_k b_k constant (primitive
///            integer form, first nonzero entry positive);
/// basis:     polynomials P_j with zero constant term;
/// coords:    integer matrix A with b_k = constants_k + sum_j A_{k,j} P_j;
/// constants: the constant parts c_k.
struct DepCertificate {
  std::vector<std::vector<Rat>> relations;
  std::vector<Poly> basis;
  std::vector<std::vector<Int>> coords;
  std::vector<GRat> constants;
};

/// Zeroes the degree-0 coefficient.
Poly strip_const(const Poly& p);

/// Basis of the rational kernel of the coefficient matrix of
/// strip_const(bs); each Gaussian-rational coefficient contributes two
/// rational rows (real and imaginary parts). Empty iff the inputs are
/// linearly independent over Q modulo constants. Vectors are returned in
/// primitive integer form with first nonzero entry positive.
std::vector<std::vector<Rat>> qdep_modconst(const std::vector<Poly>& bs);

/// Integer-combination basis: a Q-basis of span(strip_const(bs)) rescaled
/// via Hermite-normal-form row reduction (after clearing denominators) so
/// that every input is an exact Z-combination of the basis plus a constant.
DepCertificate int_basis_modconst(const std::vector<Poly>& bs);

/// True iff qdep_modconst(bs) is empty; by Ax-Lindemann-Weierstrass this
/// certifies algebraic independence of the corresponding exponentials.
bool axlw_independent(const std::vector<Poly>& bs);

/// Iterated elimination: while the set is dependent modulo constants,
/// rewrite one element over a strictly smaller generating set; returns the
/// certificate chain (empty for independent input).
std::vector<DepCertificate> descent_trace(std::vector<Poly> bs);

}  // namespace exppell

#endif
