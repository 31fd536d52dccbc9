#pragma once

#include "superchar/numeric.hpp"
#include "superchar/partition.hpp"

namespace superchar {

// Dimension of the gl(k) irrep labelled by lambda; 0 when length(lambda) > k.
// Hook content product with exact division.
BigCount gl_dim(const Partition& lambda, int k);

// Superdimension of the covariant gl(m|n) module: gl_dim(lambda, m-n) for
// m >= n, and (-1)^|lambda| gl_dim(lambda', n-m) for m < n.
BigCount gl_superdim(const Partition& lambda, int m, int n);

// Dimension of the covariant gl(m|n) module; 0 iff lambda leaves the (m,n)-hook.
BigCount gl_mn_dim(const Partition& lambda, int m, int n);

// Schur function values at exact rational points. Evaluation goes through the
// Jacobi-Trudi determinant in complete homogeneous evaluations, so repeated
// coordinates are fine; determinants use fraction-free elimination.
Rational schur_eval(const Partition& lambda, const RationalPoint& x);
Rational skew_schur_eval(const Partition& lambda, const Partition& mu, const RationalPoint& x);

// Supersymmetric Schur value s_lambda(x|y) = sum over mu inside lambda of
// s_mu(x) * s_{lambda'/mu'}(y). Zero whenever lambda_{m+1} > n. The all-ones /
// all-minus-ones points run on a pure integer path.
Rational super_schur_eval(const Partition& lambda, const RationalPoint& x,
                          const RationalPoint& y);

}  // namespace superchar
