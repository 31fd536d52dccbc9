#pragma once

#include "superchar/char_series.hpp"
#include "superchar/report.hpp"
#include "superchar/series.hpp"

#include <string>

namespace superchar {

// Sum of coeff(lambda) * dim(lambda) * t^|lambda| over the labels, where dim
// is the gl(k) dimension for so/osp1 families and the gl(m|n) dimension for
// the orthosymplectic ones. Prefactors are dropped.
TruncatedSeries t_dimension(const CharExpansion& e, long degree);

// Same grading with gl(m|n) superdimensions; osp(2m+1|2n)/osp(2m|2n) families only.
TruncatedSeries t_superdimension(const CharExpansion& e, long degree);

// Principal specialization of e^{-hw} ch for the so(2n+1) representation
// [0,...,0,p], every simple-root exponential sent to q. With coroot-normalized
// exponents this variable already carries integer powers; it is what the
// classical product formulas call q^2 when they write exponents against the
// standard bilinear form. The polynomial has degree p*n(n+1)/2 and constant
// term 1; pass degree = -1 for the full polynomial.
TruncatedSeries qdim_so_odd(int n, int p, long degree = -1);

struct IdentityParams {
    int m = -1, n = -1, k = -1, r = -1, p = -1;

    std::string to_string() const;
};

// Registry: B-case1, B-case2, B-case3, D-even, D-odd, D-fork-conj, qdim-so7.
// Compares a t-superdimension series against the matching dimension series
// through the requested degree (ignored by qdim-so7, which runs at full
// polynomial degree). Unknown names throw std::invalid_argument.
VerificationReport verify_superdim_identity(const std::string& name, const IdentityParams& params,
                                            long degree);

}  // namespace superchar
