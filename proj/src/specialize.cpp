#include "superchar/specialize.hpp"

#include "superchar/symfunc.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace superchar {

namespace {

void require_cutoff(const CharExpansion& e, long degree) {
    if (!e.complete && e.cutoff < degree) {
        std::ostringstream msg;
        msg << "expansion cutoff " << e.cutoff << " is below requested degree " << degree;
        throw std::domain_error(msg.str());
    }
}

BigCount label_dimension(const CharExpansion& e, const Partition& lambda) {
    switch (e.family) {
        case Family::SoOddRect:
        case Family::SoEvenFork:
        case Family::Osp1Rect: return gl_dim(lambda, e.gl_rank());
        default: return gl_mn_dim(lambda, e.m, e.n);
    }
}

// n(lambda) = sum (i-1) lambda_i
long n_statistic(const Partition& lambda) {
    long acc = 0;
    for (int i = 1; i <= lambda.length(); ++i) acc += static_cast<long>(i - 1) * lambda.part(i);
    return acc;
}

VerificationReport compare_series(std::string identity, std::string params,
                                  const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    VerificationReport report{std::move(identity), std::move(params), true, "", ""};
    long t = std::min(lhs.trunc(), rhs.trunc());
    for (long d = 0; d <= t; ++d) {
        if (lhs.coeff(d) == rhs.coeff(d)) continue;
        report.passed = false;
        std::ostringstream out;
        out << "degree " << d << ": lhs=" << lhs.coeff(d).get_str()
            << " rhs=" << rhs.coeff(d).get_str();
        report.first_mismatch = out.str();
        break;
    }
    return report;
}

}  // namespace

TruncatedSeries t_dimension(const CharExpansion& e, long degree) {
    require_cutoff(e, degree);
    TruncatedSeries s("t", degree);
    for (const Term& t : e.terms) {
        long w = t.partition.weight();
        if (w > degree) continue;
        s.at(w) += t.coeff * label_dimension(e, t.partition);
    }
    return s;
}

TruncatedSeries t_superdimension(const CharExpansion& e, long degree) {
    switch (e.family) {
        case Family::OspOddRect:
        case Family::OspEvenRect:
        case Family::OspEvenForkConj: break;
        default:
            throw std::domain_error(
                "t_superdimension: family " + family_name(e.family) +
                " carries plain Schur labels; only osp(2m+1|2n)/osp(2m|2n) expansions apply");
    }
    require_cutoff(e, degree);
    TruncatedSeries s("t", degree);
    for (const Term& t : e.terms) {
        long w = t.partition.weight();
        if (w > degree) continue;
        s.at(w) += t.coeff * gl_superdim(t.partition, e.m, e.n);
    }
    return s;
}

TruncatedSeries qdim_so_odd(int n, int p, long degree) {
    if (n < 1) throw std::invalid_argument("qdim_so_odd: rank n must be >= 1");
    if (p < 0) throw std::invalid_argument("qdim_so_odd: p must be nonnegative");
    const long height_sum = static_cast<long>(n) * (n + 1) / 2;  // ht of (1,...,1)
    const long full_degree = p * height_sum;
    if (degree < 0) degree = full_degree;
    TruncatedSeries out("q", degree);

    EnumConstraints c;
    c.max_part = p;
    c.max_length = n;
    for (const auto& lambda : enumerate_all(c)) {
        // principal evaluation s_lambda(q^n,...,q) = q^{|lambda| + n(lambda)}
        //   * prod over cells (1 - q^{n + content}) / (1 - q^{hook})
        const long w = lambda.weight();
        const long low = w + n_statistic(lambda);
        const Partition conj = lambda.conjugate();
        std::vector<long> numer, denom;
        for (int i = 1; i <= lambda.length(); ++i)
            for (int j = 1; j <= lambda.part(i); ++j) {
                numer.push_back(n + j - i);
                denom.push_back((lambda.part(i) - j) + (conj.part(j) - i) + 1);
            }
        const long ratio_degree = n * w - n_statistic(lambda) - low;
        TruncatedSeries ratio =
            TruncatedSeries::from_product("q", numer, denom, std::max<long>(ratio_degree, 0));
        // each exponent low+e of the evaluation lands at full_degree - (low+e)
        for (long e = 0; e <= ratio.trunc(); ++e) {
            if (ratio.coeff(e) == 0) continue;
            long idx = full_degree - low - e;
            assert(idx >= 0);
            if (idx <= degree) out.at(idx) += ratio.coeff(e);
        }
    }
    return out;
}

std::string IdentityParams::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const char* tag, int v) {
        if (v < 0) return;
        if (!first) out << ' ';
        out << tag << '=' << v;
        first = false;
    };
    emit("m", m);
    emit("n", n);
    emit("k", k);
    emit("r", r);
    emit("p", p);
    return out.str();
}

VerificationReport verify_superdim_identity(const std::string& name, const IdentityParams& P,
                                            long degree) {
    std::ostringstream params;
    params << P.to_string() << " D=" << degree;

    if (name == "B-case1") {
        if (P.n < 1 || P.p < 0) throw std::invalid_argument("B-case1 needs n >= 1, p >= 0");
        auto lhs = t_superdimension(char_osp_odd(P.n, P.n, P.p, degree), degree);
        auto rhs = TruncatedSeries::one("t", degree);
        return compare_series(name, params.str(), lhs, rhs);
    }
    if (name == "B-case2") {
        if (P.n < 0 || P.k < 1 || P.p < 0)
            throw std::invalid_argument("B-case2 needs n >= 0, k >= 1, p >= 0");
        auto lhs = t_superdimension(char_osp_odd(P.n + P.k, P.n, P.p, degree), degree);
        auto rhs = t_dimension(char_so_odd(P.k, P.p), degree);
        return compare_series(name, params.str(), lhs, rhs);
    }
    if (name == "B-case3") {
        if (P.m < 1 || P.k < 1 || P.p < 0)
            throw std::invalid_argument("B-case3 needs m >= 1, k >= 1, p >= 0");
        auto lhs = t_superdimension(char_osp_odd(P.m, P.m + P.k, P.p, degree), degree);
        auto rhs = t_dimension(char_osp1(P.k, P.p, degree), degree).negate_odd();
        return compare_series(name, params.str(), lhs, rhs);
    }
    if (name == "D-even" || name == "D-odd") {
        if (P.n < 0 || P.k < 2 || P.p < 0)
            throw std::invalid_argument(name + " needs n >= 0, k >= 2, p >= 0");
        const bool even = (P.k % 2 == 0);
        if (even != (name == "D-even"))
            throw std::invalid_argument(name + ": k parity does not match the identity");
        auto lhs = t_superdimension(char_osp_even(P.n + P.k, P.n, P.p, degree), degree);
        // k even: rectangle labels [0,...,0,p]; k odd: [0,...,0,p,0]
        auto rhs = t_dimension(char_so_even_fork(P.k, even ? 0 : P.p, P.p), degree);
        return compare_series(name, params.str(), lhs, rhs);
    }
    if (name == "D-fork-conj") {
        if (P.n < 0 || P.k < 2 || P.r < 0 || P.p < 0)
            throw std::invalid_argument("D-fork-conj needs n >= 0, k >= 2, 0 <= r <= p");
        auto lhs =
            t_superdimension(char_osp_even_fork_conj(P.n + P.k, P.n, P.r, P.p, degree), degree);
        auto rhs = t_dimension(char_so_even_fork(P.k, P.r, P.p), degree);
        return compare_series(name, params.str(), lhs, rhs);
    }
    if (name == "qdim-so7") {
        if (P.p < 0) throw std::invalid_argument("qdim-so7 needs p >= 0");
        const long full = 6L * P.p;
        auto lhs = qdim_so_odd(3, P.p);
        auto rhs = TruncatedSeries::from_product(
            "q", {P.p + 5, P.p + 4, P.p + 3, P.p + 3, P.p + 2, P.p + 1}, {5, 4, 3, 3, 2, 1}, full);
        std::ostringstream qparams;
        qparams << "n=3 p=" << P.p << " D=" << full;
        return compare_series(name, qparams.str(), lhs, rhs);
    }
    throw std::invalid_argument("verify_superdim_identity: unknown identity '" + name + "'");
}

}  // namespace superchar
