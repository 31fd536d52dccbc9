#pragma once

#include "superchar/numeric.hpp"
#include "superchar/partition.hpp"
#include "superchar/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superchar {

enum class Family {
    SoOddRect,        // so(2k+1), labels [0,...,0,p]: full k x p rectangle
    SoEvenFork,       // so(2k),   labels [0,...,0,r,p-r]: B_r (k even) / B_{p-r} (k odd)
    Osp1Rect,         // osp(1|2n), labels [0,...,0,-p]: length <= min(n,p)
    OspOddRect,       // osp(2m+1|2n), labels [0,...,0,p]: (m,n)-hook, width <= p
    OspEvenRect,      // osp(2m|2n),   labels [0,...,0,p]: class B in the hook
    OspEvenForkConj,  // osp(2m|2n) fork, conjectural: B_r / B_{p-r} in the hook
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct Term {
    Partition partition;
    long coeff = 1;
};

// A character as a graded formal expansion over partition labels.
//
// Only the |lambda| grading of the labels feeds the specializations; the
// uniform prefactor exponents are carried verbatim and never applied. The
// sources use x_i = e^{epsilon_i} for the odd orthogonal series but
// x_i = e^{-epsilon_i} on the orthosymplectic side; since both grade the same
// label stream by |lambda|, the difference never reaches a computed value.
struct CharExpansion {
    Family family = Family::SoOddRect;
    int k = 0;         // so(2k+1)/so(2k) rank
    int m = 0, n = 0;  // osp ranks; osp(1|2n) uses n
    int r = -1;        // fork label, -1 when absent
    int p = 0;
    Rational x_exp;    // exponent applied uniformly to every x variable
    Rational y_exp;    // and to every y variable
    long cutoff = 0;   // largest label weight materialized
    bool complete = false;  // terms cover the whole (finite) character
    bool conjectural = false;
    std::vector<Term> terms;  // stream order, every coefficient 1

    // Rank of the gl algebra whose dimensions grade the labels; only for
    // families carrying plain Schur labels (so / osp1).
    int gl_rank() const;
};

CharExpansion char_so_odd(int k, int p);
CharExpansion char_osp1(int n, int p, long cutoff);
CharExpansion char_osp_odd(int m, int n, int p, long cutoff);
CharExpansion char_osp_even(int m, int n, int p, long cutoff);
CharExpansion char_so_even_fork(int k, int r, int p);
CharExpansion char_osp_even_fork_conj(int m, int n, int r, int p, long cutoff);

// Label-multiset identity: sum over r of the fork characters against the
// rectangle character of the algebra one rank up.
VerificationReport check_fork_sum_so(int k, int p, std::optional<long> cutoff = std::nullopt);
VerificationReport check_fork_sum_osp(int m, int n, int p, long cutoff);

// Dynkin labels with support on the last one or two nodes.
struct DynkinLabels {
    enum class Algebra { Bk, Dk, Bmn, Dmn, B0n };

    Algebra algebra;
    std::vector<int> labels;

    DynkinLabels(Algebra a, std::vector<int> l);  // validates the support
    static DynkinLabels rectangle(Algebra a, int nodes, int p);
    static DynkinLabels fork(Algebra a, int nodes, int r, int p);  // [0,...,0,r,p-r]
};

}  // namespace superchar
