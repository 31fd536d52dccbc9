#include "superchar/char_series.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace superchar {

namespace {

std::vector<Term> materialize(const EnumConstraints& c) {
    std::vector<Term> terms;
    for (auto& lambda : enumerate_all(c)) terms.push_back({std::move(lambda), 1});
    return terms;
}

void require_labels(int r, int p) {
    if (p < 0) throw std::invalid_argument("character labels: p must be nonnegative");
    if (r < 0 || r > p)
        throw std::invalid_argument("character labels: fork label r must satisfy 0 <= r <= p");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::SoOddRect: return "SoOddRect";
        case Family::SoEvenFork: return "SoEvenFork";
        case Family::Osp1Rect: return "Osp1Rect";
        case Family::OspOddRect: return "OspOddRect";
        case Family::OspEvenRect: return "OspEvenRect";
        case Family::OspEvenForkConj: return "OspEvenForkConj";
    }
    std::abort();
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::SoOddRect, Family::SoEvenFork, Family::Osp1Rect, Family::OspOddRect,
                     Family::OspEvenRect, Family::OspEvenForkConj})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

int CharExpansion::gl_rank() const {
    switch (family) {
        case Family::SoOddRect:
        case Family::SoEvenFork: return k;
        case Family::Osp1Rect: return n;
        default:
            throw std::domain_error("gl_rank: family carries supersymmetric labels");
    }
}

CharExpansion char_so_odd(int k, int p) {
    if (k < 1) throw std::invalid_argument("char_so_odd: rank k must be >= 1");
    if (p < 0) throw std::invalid_argument("char_so_odd: p must be nonnegative");
    CharExpansion e;
    e.family = Family::SoOddRect;
    e.k = k;
    e.p = p;
    e.x_exp = make_rational(-p, 2);
    e.cutoff = static_cast<long>(k) * p;
    e.complete = true;
    EnumConstraints c;
    c.max_part = p;
    c.max_length = k;
    e.terms = materialize(c);
    return e;
}

CharExpansion char_osp1(int n, int p, long cutoff) {
    if (n < 1) throw std::invalid_argument("char_osp1: rank n must be >= 1");
    if (p < 0) throw std::invalid_argument("char_osp1: p must be nonnegative");
    if (cutoff < 0) throw std::invalid_argument("char_osp1: infinite family needs a cutoff");
    CharExpansion e;
    e.family = Family::Osp1Rect;
    e.n = n;
    e.p = p;
    e.x_exp = make_rational(p, 2);
    e.cutoff = cutoff;
    EnumConstraints c;
    c.max_length = std::min(n, p);
    c.max_weight = cutoff;
    e.terms = materialize(c);
    return e;
}

CharExpansion char_osp_odd(int m, int n, int p, long cutoff) {
    if (m < 1 || n < 0) throw std::invalid_argument("char_osp_odd: need m >= 1, n >= 0");
    if (p < 0) throw std::invalid_argument("char_osp_odd: p must be nonnegative");
    if (cutoff < 0) throw std::invalid_argument("char_osp_odd: infinite family needs a cutoff");
    CharExpansion e;
    e.family = Family::OspOddRect;
    e.m = m;
    e.n = n;
    e.p = p;
    e.x_exp = make_rational(-p, 2);
    e.y_exp = make_rational(p, 2);
    e.cutoff = cutoff;
    EnumConstraints c;
    c.hook = {m, n};
    c.max_part = p;
    c.max_weight = cutoff;
    e.terms = materialize(c);
    return e;
}

CharExpansion char_osp_even(int m, int n, int p, long cutoff) {
    if (m < 1 || n < 0) throw std::invalid_argument("char_osp_even: need m >= 1, n >= 0");
    if (p < 0) throw std::invalid_argument("char_osp_even: p must be nonnegative");
    if (cutoff < 0) throw std::invalid_argument("char_osp_even: infinite family needs a cutoff");
    CharExpansion e;
    e.family = Family::OspEvenRect;
    e.m = m;
    e.n = n;
    e.p = p;
    e.x_exp = make_rational(-p, 2);
    e.y_exp = make_rational(p, 2);
    e.cutoff = cutoff;
    EnumConstraints c;
    c.hook = {m, n};
    c.max_part = p;
    c.part_class = EnumConstraints::Class::B;
    c.max_weight = cutoff;
    e.terms = materialize(c);
    return e;
}

CharExpansion char_so_even_fork(int k, int r, int p) {
    if (k < 2) throw std::invalid_argument("char_so_even_fork: rank k must be >= 2");
    require_labels(r, p);
    CharExpansion e;
    e.family = Family::SoEvenFork;
    e.k = k;
    e.r = r;
    e.p = p;
    e.x_exp = make_rational(-p, 2);
    e.cutoff = static_cast<long>(k) * p;
    e.complete = true;
    EnumConstraints c;
    c.max_part = p;
    c.max_length = k;
    c.part_class = EnumConstraints::Class::Br;
    c.strip_length = (k % 2 == 0) ? r : p - r;
    e.terms = materialize(c);
    return e;
}

CharExpansion char_osp_even_fork_conj(int m, int n, int r, int p, long cutoff) {
    if (m < 1 || n < 0) throw std::invalid_argument("char_osp_even_fork_conj: need m >= 1, n >= 0");
    require_labels(r, p);
    if (cutoff < 0)
        throw std::invalid_argument("char_osp_even_fork_conj: infinite family needs a cutoff");
    CharExpansion e;
    e.family = Family::OspEvenForkConj;
    e.m = m;
    e.n = n;
    e.r = r;
    e.p = p;
    e.x_exp = make_rational(-p, 2);
    e.y_exp = make_rational(p, 2);
    e.cutoff = cutoff;
    e.conjectural = true;
    EnumConstraints c;
    c.hook = {m, n};
    c.max_part = p;
    c.part_class = EnumConstraints::Class::Br;
    c.strip_length = (std::abs(m - n) % 2 == 0) ? r : p - r;
    c.max_weight = cutoff;
    e.terms = materialize(c);
    return e;
}

namespace {

// Multiset comparison of label streams, reported at the first graded mismatch.
VerificationReport compare_label_sums(std::string identity, std::string params,
                                      const std::vector<const CharExpansion*>& lhs,
                                      const CharExpansion& rhs, long cutoff) {
    std::map<Partition, long> sums;
    for (const CharExpansion* e : lhs)
        for (const Term& t : e->terms)
            if (t.partition.weight() <= cutoff) sums[t.partition] += t.coeff;
    for (const Term& t : rhs.terms)
        if (t.partition.weight() <= cutoff) sums[t.partition] -= t.coeff;

    VerificationReport report{std::move(identity), std::move(params), true, "", ""};
    const Partition* worst = nullptr;
    long delta = 0;
    for (const auto& [lambda, excess] : sums) {
        if (excess == 0) continue;
        if (!worst || stream_less(lambda, *worst)) {
            worst = &lambda;
            delta = excess;
        }
    }
    if (worst) {
        report.passed = false;
        std::ostringstream out;
        out << "label " << worst->to_string() << ": lhs total exceeds rhs by " << delta;
        report.first_mismatch = out.str();
    }
    return report;
}

}  // namespace

VerificationReport check_fork_sum_so(int k, int p, std::optional<long> cutoff) {
    const long full = static_cast<long>(k) * p;
    const long w = cutoff.value_or(full);
    CharExpansion rect = char_so_odd(k, p);
    std::vector<CharExpansion> forks;
    forks.reserve(static_cast<std::size_t>(p) + 1);
    for (int r = 0; r <= p; ++r) forks.push_back(char_so_even_fork(k, r, p));
    std::vector<const CharExpansion*> lhs;
    for (const auto& f : forks) lhs.push_back(&f);

    std::ostringstream params;
    params << "k=" << k << " p=" << p << " W=" << w;
    auto report = compare_label_sums("e28", params.str(), lhs, rect, w);
    if (w < full) report.note = "cutoff below k*p: comparison truncated";
    return report;
}

VerificationReport check_fork_sum_osp(int m, int n, int p, long cutoff) {
    CharExpansion rect = char_osp_odd(m, n, p, cutoff);
    std::vector<CharExpansion> forks;
    forks.reserve(static_cast<std::size_t>(p) + 1);
    for (int r = 0; r <= p; ++r) forks.push_back(char_osp_even_fork_conj(m, n, r, p, cutoff));
    std::vector<const CharExpansion*> lhs;
    for (const auto& f : forks) lhs.push_back(&f);

    std::ostringstream params;
    params << "m=" << m << " n=" << n << " p=" << p << " W=" << cutoff;
    return compare_label_sums("e28b (osp reading)", params.str(), lhs, rect, cutoff);
}

DynkinLabels::DynkinLabels(Algebra a, std::vector<int> l) : algebra(a), labels(std::move(l)) {
    if (labels.empty()) throw std::invalid_argument("DynkinLabels: empty label list");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) throw std::invalid_argument("DynkinLabels: labels must be nonnegative");
        if (labels[i] != 0 && i + 2 < labels.size())
            throw std::invalid_argument("DynkinLabels: support must sit on the last two nodes");
    }
}

DynkinLabels DynkinLabels::rectangle(Algebra a, int nodes, int p) {
    if (nodes < 1) throw std::invalid_argument("DynkinLabels: need at least one node");
    std::vector<int> l(static_cast<std::size_t>(nodes), 0);
    l.back() = p;
    return DynkinLabels(a, std::move(l));
}

DynkinLabels DynkinLabels::fork(Algebra a, int nodes, int r, int p) {
    if (nodes < 2) throw std::invalid_argument("DynkinLabels: fork needs two nodes");
    require_labels(r, p);
    std::vector<int> l(static_cast<std::size_t>(nodes), 0);
    l[l.size() - 2] = r;
    l.back() = p - r;
    return DynkinLabels(a, std::move(l));
}

}  // namespace superchar
