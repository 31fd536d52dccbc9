#include "superchar/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superchar {

// Weights live on doubled integer coordinates internally, so spinor weights
// (all coordinates half-odd) stay exact without rational arithmetic.
namespace {

using Vec = std::vector<int>;

long dot(const Vec& a, const Vec& b) {
    long acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<long>(a[i]) * b[i];
    return acc;
}

bool dominant(const Vec& w, Series s) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    if (s == Series::B) return w.empty() || w.back() >= 0;
    return w.size() < 2 || w[w.size() - 2] >= std::abs(w.back());
}

Vec dominantize(Vec w, Series s) {
    int negatives = 0;
    for (int& c : w)
        if (c < 0) {
            c = -c;
            ++negatives;
        }
    std::sort(w.begin(), w.end(), std::greater<int>());
    if (s == Series::D && negatives % 2 != 0 && !w.empty() && w.back() != 0) w.back() = -w.back();
    return w;
}

// Is v (doubled coordinates) a nonnegative integer combination of simple roots?
bool in_positive_root_cone(const Vec& v, Series s) {
    const int k = static_cast<int>(v.size());
    for (int c : v)
        if (c % 2 != 0) return false;  // not in the root lattice
    long partial = 0;
    if (s == Series::B) {
        for (int i = 0; i < k; ++i) {
            partial += v[i] / 2;
            if (partial < 0) return false;
        }
        return true;
    }
    long total = 0;
    for (int i = 0; i < k; ++i) {
        total += v[i] / 2;
        if (i < k - 2) {
            partial += v[i] / 2;
            if (partial < 0) return false;
        }
    }
    if (total % 2 != 0) return false;
    long last = v[k - 1] / 2;
    return total - 2 * last >= 0 && total >= 0;  // coefficients of the two fork roots
}

// Height of v = sum c_i alpha_i in simple roots (doubled input, exact integer).
long cone_height(const Vec& v, Series s) {
    const int k = static_cast<int>(v.size());
    long height = 0, partial = 0;
    if (s == Series::B) {
        for (int i = 0; i < k; ++i) {
            partial += v[i] / 2;
            height += partial;
        }
        return height;
    }
    long total = 0;
    for (int i = 0; i < k; ++i) {
        total += v[i] / 2;
        if (i < k - 2) {
            partial += v[i] / 2;
            height += partial;
        }
    }
    long last = v[k - 1] / 2;
    return height + (total - 2 * last) / 2 + total / 2;
}

Vec doubled(const std::vector<Rational>& w) {
    Vec out;
    out.reserve(w.size());
    for (const auto& q : w) {
        Rational d = q * 2;
        if (d.get_den() != 1)
            throw std::invalid_argument("weight coordinates must be integers or half-integers");
        if (!d.get_num().fits_sint_p())
            throw std::invalid_argument("weight coordinate out of range");
        out.push_back(static_cast<int>(d.get_num().get_si()));
    }
    return out;
}

std::vector<Rational> halved(const Vec& w) {
    std::vector<Rational> out;
    out.reserve(w.size());
    for (int c : w) out.push_back(make_rational(c, 2));
    return out;
}

Vec doubled_rho(const RootSystemData& data) {
    return doubled(data.rho);
}

void check_weight_class(const Vec& hw2) {
    const int parity = ((hw2.empty() ? 0 : hw2[0]) % 2 + 2) % 2;
    for (int c : hw2)
        if (((c % 2) + 2) % 2 != parity)
            throw std::invalid_argument(
                "highest weight must have all-integer or all-half-integer coordinates");
}

// All dominant lattice points of the weight class below hw (candidate weights).
std::vector<Vec> dominant_candidates(const Vec& hw2, Series s) {
    const int k = static_cast<int>(hw2.size());
    const int parity = ((hw2[0] % 2) + 2) % 2;
    std::vector<Vec> out;
    Vec cur(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int hi) {
        if (pos == k) {
            Vec diff(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) diff[i] = hw2[i] - cur[i];
            if (in_positive_root_cone(diff, s)) out.push_back(cur);
            return;
        }
        const bool last = (pos == k - 1);
        int lo = 0;
        if (last && s == Series::D) lo = (k >= 2) ? -cur[pos - 1] : -hi;
        // smallest value >= lo with the right parity
        int start = lo + ((((lo % 2) + 2) % 2 != parity) ? 1 : 0);
        for (int v = start; v <= hi; v += 2) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
        cur[pos] = 0;
    };
    rec(0, hw2[0]);
    return out;
}

// Orbit of a dominant weight: permutations with all (B) / even (D) sign flips.
std::set<Vec> weyl_orbit(const Vec& w, Series s) {
    const int k = static_cast<int>(w.size());
    std::set<Vec> orbit;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (s == Series::D && std::popcount(mask) % 2 != 0) continue;
        Vec v = w;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) v[i] = -v[i];
        std::sort(v.begin(), v.end());
        do {
            orbit.insert(v);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return orbit;
}

// All semistandard fillings of lambda with entries <= k, bucketed by content.
std::map<Vec, BigCount> monomial_expansion(const Partition& lambda, int k) {
    std::map<Vec, BigCount> out;
    const int rows = lambda.length();
    std::vector<std::vector<int>> tab(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) tab[i].assign(static_cast<std::size_t>(lambda.part(i + 1)), 0);
    Vec content(static_cast<std::size_t>(k), 0);

    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i == rows) {
            out[content] += 1;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= lambda.part(i + 1)) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, tab[i][j - 1]);
        if (i > 0 && j < lambda.part(i)) lo = std::max(lo, tab[i - 1][j] + 1);
        for (int v = lo; v <= k; ++v) {
            tab[i][j] = v;
            ++content[v - 1];
            fill(ni, nj);
            --content[v - 1];
        }
        tab[i][j] = 0;
    };
    if (rows == 0)
        out[content] = 1;
    else
        fill(0, 0);
    return out;
}

}  // namespace

RootSystemData RootSystemData::make(Series s, int rank) {
    if (rank < 1 || (s == Series::D && rank < 2))
        throw std::invalid_argument("RootSystemData: rank too small for the series");
    RootSystemData data;
    data.series = s;
    data.rank = rank;
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            std::vector<int> diff(static_cast<std::size_t>(rank), 0);
            diff[i] = 1;
            diff[j] = -1;
            data.positive_roots.push_back(diff);
            diff[j] = 1;
            data.positive_roots.push_back(diff);
        }
    if (s == Series::B)
        for (int i = 0; i < rank; ++i) {
            std::vector<int> e(static_cast<std::size_t>(rank), 0);
            e[i] = 1;
            data.positive_roots.push_back(e);
        }
    data.rho.assign(static_cast<std::size_t>(rank), Rational(0));
    for (int i = 0; i < rank; ++i) {
        int twice = (s == Series::B) ? 2 * (rank - i) - 1 : 2 * (rank - 1 - i);
        data.rho[i] = make_rational(twice, 2);
    }
    return data;
}

BigCount WeightMultiplicityTable::total_multiplicity() const {
    BigCount total = 0;
    for (const auto& [w, m] : mult) total += m;
    return total;
}

std::vector<Rational> dynkin_to_epsilon(Series s, int rank, const DynkinLabels& labels) {
    if (static_cast<int>(labels.labels.size()) != rank)
        throw std::invalid_argument("dynkin_to_epsilon: label count must equal the rank");
    for (std::size_t i = 0; i + 1 < labels.labels.size(); ++i)
        if (labels.labels[i] != 0 && (s == Series::B || i + 2 < labels.labels.size()))
            throw std::invalid_argument("dynkin_to_epsilon: unsupported label position");
    std::vector<Rational> hw(static_cast<std::size_t>(rank));
    if (s == Series::B) {
        int p = labels.labels.back();
        for (auto& c : hw) c = make_rational(p, 2);
        return hw;
    }
    if (rank < 2) throw std::invalid_argument("dynkin_to_epsilon: D series needs rank >= 2");
    int r = labels.labels[static_cast<std::size_t>(rank) - 2];
    int p = r + labels.labels.back();
    for (int i = 0; i + 1 < rank; ++i) hw[i] = make_rational(p, 2);
    hw[static_cast<std::size_t>(rank) - 1] = make_rational(p - 2 * r, 2);
    return hw;
}

WeightMultiplicityTable freudenthal_table(Series s, int rank,
                                          const std::vector<Rational>& highest_weight) {
    RootSystemData data = RootSystemData::make(s, rank);
    Vec hw2 = doubled(highest_weight);
    if (static_cast<int>(hw2.size()) != rank)
        throw std::invalid_argument("freudenthal_table: weight length must equal the rank");
    check_weight_class(hw2);
    if (!dominant(hw2, s))
        throw std::invalid_argument("freudenthal_table: highest weight is not dominant");

    std::vector<Vec> candidates = dominant_candidates(hw2, s);
    std::sort(candidates.begin(), candidates.end(), [&](const Vec& a, const Vec& b) {
        Vec da(hw2.size()), db(hw2.size());
        for (std::size_t i = 0; i < hw2.size(); ++i) {
            da[i] = hw2[i] - a[i];
            db[i] = hw2[i] - b[i];
        }
        return cone_height(da, s) < cone_height(db, s);
    });

    Vec rho2 = doubled_rho(data);
    Vec hw_rho = hw2;
    for (std::size_t i = 0; i < hw_rho.size(); ++i) hw_rho[i] += rho2[i];
    const long hw_norm = dot(hw_rho, hw_rho);

    std::vector<Vec> roots2;
    for (const auto& alpha : data.positive_roots) {
        Vec a2(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) a2[i] = 2 * alpha[i];
        roots2.push_back(std::move(a2));
    }

    std::map<Vec, BigCount> dominant_mult;
    for (const Vec& mu : candidates) {
        if (mu == hw2) {
            dominant_mult[mu] = 1;
            continue;
        }
        BigCount numer = 0;
        for (const Vec& a2 : roots2) {
            Vec w = mu;
            while (true) {
                for (std::size_t i = 0; i < w.size(); ++i) w[i] += a2[i];
                auto it = dominant_mult.find(dominantize(w, s));
                if (it == dominant_mult.end()) break;  // left the weight string
                numer += it->second * dot(w, a2);
            }
        }
        Vec mu_rho = mu;
        for (std::size_t i = 0; i < mu_rho.size(); ++i) mu_rho[i] += rho2[i];
        const long denom = hw_norm - dot(mu_rho, mu_rho);
        if (denom <= 0)
            throw std::logic_error("freudenthal_table: nonpositive denominator");
        BigCount mult = 2 * numer;
        if (!mpz_divisible_ui_p(mult.get_mpz_t(), static_cast<unsigned long>(denom)))
            throw std::logic_error("freudenthal_table: inexact multiplicity division");
        mpz_divexact_ui(mult.get_mpz_t(), mult.get_mpz_t(), static_cast<unsigned long>(denom));
        if (mult != 0) dominant_mult[mu] = mult;
    }

    WeightMultiplicityTable table;
    table.highest_weight = highest_weight;
    for (const auto& [mu, m] : dominant_mult)
        for (const Vec& w : weyl_orbit(mu, s)) table.mult[halved(w)] = m;
    return table;
}

BigCount weyl_dim(Series s, int rank, const std::vector<Rational>& highest_weight) {
    RootSystemData data = RootSystemData::make(s, rank);
    Vec hw2 = doubled(highest_weight);
    check_weight_class(hw2);
    if (!dominant(hw2, s))
        throw std::invalid_argument("weyl_dim: highest weight is not dominant");
    Vec rho2 = doubled_rho(data);
    BigCount numer = 1, denom = 1;
    for (const auto& alpha : data.positive_roots) {
        long top = 0, bottom = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            top += static_cast<long>(hw2[i] + rho2[i]) * alpha[i];
            bottom += static_cast<long>(rho2[i]) * alpha[i];
        }
        numer *= top;
        denom *= bottom;
    }
    BigCount dim;
    mpz_divexact(dim.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    return dim;
}

std::vector<std::pair<Partition, BigCount>> schur_expand(const WeightMultiplicityTable& table,
                                                         const Rational& shift, int k) {
    std::map<Vec, BigCount> poly;
    for (const auto& [w, m] : table.mult) {
        if (static_cast<int>(w.size()) != k)
            throw std::invalid_argument("schur_expand: weight length must equal k");
        Vec exps;
        exps.reserve(w.size());
        for (const auto& q : w) {
            Rational e = q + shift;
            if (e.get_den() != 1)
                throw std::invalid_argument("schur_expand: shift does not clear denominators");
            if (e < 0) throw std::invalid_argument("schur_expand: negative exponent after shift");
            exps.push_back(static_cast<int>(e.get_num().get_si()));
        }
        poly[exps] = m;
    }

    std::vector<std::pair<Partition, BigCount>> result;
    while (!poly.empty()) {
        auto it = std::prev(poly.end());  // lex-maximal exponent vector
        Vec lead = it->first;
        BigCount c = it->second;
        for (std::size_t i = 0; i + 1 < lead.size(); ++i)
            if (lead[i] < lead[i + 1])
                throw std::invalid_argument("schur_expand: input table is not symmetric");
        while (!lead.empty() && lead.back() == 0) lead.pop_back();
        Partition lambda = Partition::unchecked(lead);
        for (const auto& [exps, mult] : monomial_expansion(lambda, k)) {
            auto jt = poly.find(exps);
            BigCount next = (jt == poly.end() ? BigCount(0) : jt->second) - c * mult;
            if (next == 0) {
                if (jt != poly.end()) poly.erase(jt);
            } else {
                poly[exps] = next;
            }
        }
        result.emplace_back(std::move(lambda), std::move(c));
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return stream_less(a.first, b.first); });
    return result;
}

namespace {

VerificationReport compare_with_expansion(std::string identity, std::string params,
                                          const std::vector<std::pair<Partition, BigCount>>& got,
                                          const CharExpansion& expected) {
    VerificationReport report{std::move(identity), std::move(params), true, "", ""};
    std::size_t i = 0, j = 0;
    std::ostringstream out;
    while (i < got.size() || j < expected.terms.size()) {
        if (i < got.size() && got[i].second == 0) {
            ++i;
            continue;
        }
        if (i == got.size()) {
            out << "oracle lacks label " << expected.terms[j].partition.to_string();
        } else if (j == expected.terms.size()) {
            out << "oracle has extra label " << got[i].first.to_string();
        } else if (got[i].first != expected.terms[j].partition) {
            out << "label mismatch: oracle " << got[i].first.to_string() << " vs expansion "
                << expected.terms[j].partition.to_string();
        } else if (got[i].second != expected.terms[j].coeff) {
            out << "coefficient at " << got[i].first.to_string() << ": oracle "
                << got[i].second.get_str() << " vs expansion " << expected.terms[j].coeff;
        } else {
            ++i;
            ++j;
            continue;
        }
        report.passed = false;
        report.first_mismatch = out.str();
        break;
    }
    return report;
}

}  // namespace

VerificationReport verify_theorem1(int k, int r, int p) {
    if (k < 2) throw std::invalid_argument("verify_theorem1: rank k must be >= 2");
    auto labels = DynkinLabels::fork(DynkinLabels::Algebra::Dk, k, r, p);
    auto hw = dynkin_to_epsilon(Series::D, k, labels);
    auto table = freudenthal_table(Series::D, k, hw);
    auto expansion = schur_expand(table, make_rational(p, 2), k);
    CharExpansion expected = char_so_even_fork(k, r, p);
    std::ostringstream params;
    params << "k=" << k << " r=" << r << " p=" << p;
    return compare_with_expansion("theorem1", params.str(), expansion, expected);
}

VerificationReport verify_rectangle_characters(Series s, int k, int p) {
    std::ostringstream params;
    params << "series=" << (s == Series::B ? 'B' : 'D') << " k=" << k << " p=" << p;
    if (s == Series::B) {
        auto labels = DynkinLabels::rectangle(DynkinLabels::Algebra::Bk, k, p);
        auto hw = dynkin_to_epsilon(Series::B, k, labels);
        auto table = freudenthal_table(Series::B, k, hw);
        auto expansion = schur_expand(table, make_rational(p, 2), k);
        return compare_with_expansion("rectangle", params.str(), expansion, char_so_odd(k, p));
    }
    const int r0 = (k % 2 == 0) ? 0 : p;  // [0,...,0,p] resp. [0,...,0,p,0]
    auto labels = DynkinLabels::fork(DynkinLabels::Algebra::Dk, k, r0, p);
    auto hw = dynkin_to_epsilon(Series::D, k, labels);
    auto table = freudenthal_table(Series::D, k, hw);
    auto expansion = schur_expand(table, make_rational(p, 2), k);
    return compare_with_expansion("rectangle", params.str(), expansion,
                                  char_so_even_fork(k, r0, p));
}

}  // namespace superchar
