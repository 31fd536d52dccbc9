#pragma once

#include "superchar/numeric.hpp"

#include <string>
#include <vector>

namespace superchar {

// Dense one-variable power series with exact integer coefficients, truncated
// at a fixed degree. Arithmetic never extends past the truncation.
class TruncatedSeries {
public:
    TruncatedSeries(std::string variable, long trunc);

    const std::string& variable() const { return var_; }
    long trunc() const { return static_cast<long>(coeffs_.size()) - 1; }

    const BigCount& coeff(long d) const;
    BigCount& at(long d);

    TruncatedSeries mul(const TruncatedSeries& rhs) const;
    // Requires a nonzero constant term in the divisor; every coefficient
    // division must be exact (integer output), else std::domain_error.
    TruncatedSeries div(const TruncatedSeries& rhs) const;
    // Substitute v -> -v.
    TruncatedSeries negate_odd() const;

    static TruncatedSeries one(std::string variable, long trunc);
    // prod over numer of (1 - v^a)  /  prod over denom of (1 - v^b)
    static TruncatedSeries from_product(std::string variable, const std::vector<long>& numer,
                                        const std::vector<long>& denom, long trunc);

    bool operator==(const TruncatedSeries&) const = default;

    std::vector<std::string> coeff_strings() const;
    std::string to_string() const;  // space-separated coefficient list

private:
    std::string var_;
    std::vector<BigCount> coeffs_;
};

}  // namespace superchar
