#pragma once

#include "superchar/char_series.hpp"
#include "superchar/numeric.hpp"
#include "superchar/partition.hpp"
#include "superchar/report.hpp"

#include <map>
#include <utility>
#include <vector>

namespace superchar {

enum class Series { B, D };

// so(2k+1) (B) and so(2k) (D) root data in epsilon coordinates.
struct RootSystemData {
    Series series;
    int rank = 0;
    std::vector<std::vector<int>> positive_roots;
    std::vector<Rational> rho;

    static RootSystemData make(Series s, int rank);  // D needs rank >= 2
};

// Complete weight diagram of one irreducible module.
struct WeightMultiplicityTable {
    std::vector<Rational> highest_weight;
    std::map<std::vector<Rational>, BigCount> mult;

    BigCount total_multiplicity() const;
};

// Highest weight in epsilon coordinates for labels supported on the last
// node (B) or the two fork nodes (D).
std::vector<Rational> dynkin_to_epsilon(Series s, int rank, const DynkinLabels& labels);

WeightMultiplicityTable freudenthal_table(Series s, int rank,
                                          const std::vector<Rational>& highest_weight);

BigCount weyl_dim(Series s, int rank, const std::vector<Rational>& highest_weight);

// Expand a Weyl-symmetric exponent table in the Schur basis, after adding
// `shift` to every coordinate (clears spinor half-integers). Triangular
// elimination against the lex-maximal remaining exponent vector.
std::vector<std::pair<Partition, BigCount>> schur_expand(const WeightMultiplicityTable& table,
                                                         const Rational& shift, int k);

// Character oracle for the so(2k) fork modules: Freudenthal + schur_expand
// against the combinatorial fork expansion.
VerificationReport verify_theorem1(int k, int r, int p);

// Same pipeline for the rectangle modules of so(2k+1) and so(2k).
VerificationReport verify_rectangle_characters(Series s, int k, int p);

}  // namespace superchar
