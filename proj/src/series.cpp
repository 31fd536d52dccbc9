#include "superchar/series.hpp"

#include <sstream>
#include <stdexcept>

namespace superchar {

TruncatedSeries::TruncatedSeries(std::string variable, long trunc) : var_(std::move(variable)) {
    if (trunc < 0) throw std::invalid_argument("TruncatedSeries: negative truncation");
    coeffs_.assign(static_cast<std::size_t>(trunc) + 1, BigCount(0));
}

const BigCount& TruncatedSeries::coeff(long d) const {
    if (d < 0 || d > trunc()) throw std::out_of_range("TruncatedSeries::coeff");
    return coeffs_[static_cast<std::size_t>(d)];
}

BigCount& TruncatedSeries::at(long d) {
    if (d < 0 || d > trunc()) throw std::out_of_range("TruncatedSeries::at");
    return coeffs_[static_cast<std::size_t>(d)];
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& rhs) const {
    long t = std::min(trunc(), rhs.trunc());
    TruncatedSeries out(var_, t);
    for (long i = 0; i <= t; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; i + j <= t; ++j)
            out.coeffs_[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * rhs.coeffs_[static_cast<std::size_t>(j)];
    }
    return out;
}

TruncatedSeries TruncatedSeries::div(const TruncatedSeries& rhs) const {
    if (rhs.coeffs_[0] == 0)
        throw std::domain_error("TruncatedSeries::div: divisor has zero constant term");
    long t = std::min(trunc(), rhs.trunc());
    TruncatedSeries out(var_, t);
    for (long d = 0; d <= t; ++d) {
        BigCount acc = coeffs_[static_cast<std::size_t>(d)];
        for (long i = 0; i < d; ++i)
            acc -= out.coeffs_[static_cast<std::size_t>(i)] *
                   rhs.coeffs_[static_cast<std::size_t>(d - i)];
        if (!mpz_divisible_p(acc.get_mpz_t(), rhs.coeffs_[0].get_mpz_t()))
            throw std::domain_error("TruncatedSeries::div: inexact coefficient division");
        mpz_divexact(out.coeffs_[static_cast<std::size_t>(d)].get_mpz_t(), acc.get_mpz_t(),
                     rhs.coeffs_[0].get_mpz_t());
    }
    return out;
}

TruncatedSeries TruncatedSeries::negate_odd() const {
    TruncatedSeries out(var_, trunc());
    for (long d = 0; d <= trunc(); ++d) {
        out.coeffs_[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)];
        if (d % 2 != 0)
            out.coeffs_[static_cast<std::size_t>(d)] = -out.coeffs_[static_cast<std::size_t>(d)];
    }
    return out;
}

TruncatedSeries TruncatedSeries::one(std::string variable, long trunc) {
    TruncatedSeries out(std::move(variable), trunc);
    out.coeffs_[0] = 1;
    return out;
}

TruncatedSeries TruncatedSeries::from_product(std::string variable, const std::vector<long>& numer,
                                              const std::vector<long>& denom, long trunc) {
    TruncatedSeries out = one(std::move(variable), trunc);
    for (long a : numer) {
        if (a <= 0) throw std::invalid_argument("from_product: exponents must be positive");
        // multiply by (1 - v^a) in place, descending degrees
        for (long d = trunc; d >= a; --d)
            out.coeffs_[static_cast<std::size_t>(d)] -= out.coeffs_[static_cast<std::size_t>(d - a)];
    }
    for (long b : denom) {
        if (b <= 0) throw std::invalid_argument("from_product: exponents must be positive");
        // divide by (1 - v^b): geometric accumulation, ascending degrees
        for (long d = b; d <= trunc; ++d)
            out.coeffs_[static_cast<std::size_t>(d)] += out.coeffs_[static_cast<std::size_t>(d - b)];
    }
    return out;
}

std::vector<std::string> TruncatedSeries::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ' ';
        out << coeffs_[i].get_str();
    }
    return out.str();
}

}  // namespace superchar
