#include "superchar/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace superchar {

namespace {

// Fraction-free (Bareiss) determinant; consumes its argument.
BigCount det_bareiss(std::vector<std::vector<BigCount>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    BigCount prev = 1;
    int sign = 1;
    for (int col = 0; col + 1 < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                BigCount t = a[col][col] * a[i][j] - a[i][col] * a[col][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[col][col];
    }
    return sign < 0 ? BigCount(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

// Clears row denominators, then runs the integer elimination.
Rational det_rational(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    std::vector<std::vector<BigCount>> a(n, std::vector<BigCount>(n));
    BigCount scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigCount d = 1;
        for (const auto& q : m[i]) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            BigCount factor = d / m[i][j].get_den();
            a[i][j] = m[i][j].get_num() * factor;
        }
        scale *= d;
    }
    Rational det(det_bareiss(std::move(a)), scale);
    det.canonicalize();
    return det;
}

// h_0..h_max for the point x, via the one-variable-at-a-time recurrence.
std::vector<Rational> complete_homogeneous(const RationalPoint& x, int max_deg) {
    std::vector<Rational> h(static_cast<std::size_t>(max_deg) + 1, Rational(0));
    h[0] = 1;
    for (const auto& xi : x)
        for (int r = 1; r <= max_deg; ++r) h[r] += xi * h[r - 1];
    return h;
}

Rational jt_determinant(const Partition& lambda, const Partition& mu,
                        const std::vector<Rational>& h) {
    const int n = lambda.length();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int deg = lambda.part(i) - mu.part(j) - i + j;
            m[i - 1][j - 1] = deg < 0 ? Rational(0) : h[static_cast<std::size_t>(deg)];
        }
    return det_rational(m);
}

BigCount binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Number of semistandard skew tableaux of shape alpha/beta with entries <= k:
// the Jacobi-Trudi determinant at all-ones, where h_r(1^k) = C(k+r-1, r).
BigCount skew_tableau_count(const Partition& alpha, const Partition& beta, int k) {
    if (!alpha.contains(beta)) return 0;
    const int n = alpha.length();
    std::vector<std::vector<BigCount>> m(n, std::vector<BigCount>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int r = alpha.part(i) - beta.part(j) - i + j;
            if (r < 0)
                m[i - 1][j - 1] = 0;
            else if (k == 0)
                m[i - 1][j - 1] = (r == 0) ? 1 : 0;
            else
                m[i - 1][j - 1] = binomial(k - 1 + r, r);
        }
    return det_bareiss(std::move(m));
}

// Visits every mu inside lambda with at most max_len rows.
void for_each_subpartition(const Partition& lambda, int max_len,
                           const std::function<void(const Partition&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int row) {
        if (row > lambda.length() || row > max_len) {
            fn(Partition::unchecked(cur));
            return;
        }
        int hi = std::min(lambda.part(row), row > 1 ? cur[row - 2] : lambda.part(1));
        fn(Partition::unchecked(cur));  // stop here: shorter mu
        for (int v = 1; v <= hi; ++v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

bool all_equal_to(const RationalPoint& x, int value) {
    return std::all_of(x.begin(), x.end(), [&](const Rational& q) { return q == value; });
}

}  // namespace

BigCount gl_dim(const Partition& lambda, int k) {
    if (k < 0) throw std::invalid_argument("gl_dim: negative rank");
    if (lambda.length() > k) return 0;
    if (lambda.empty()) return 1;
    const Partition conj = lambda.conjugate();
    BigCount num = 1, den = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            num *= k + j - i;
            den *= (lambda.part(i) - j) + (conj.part(j) - i) + 1;
        }
    BigCount dim;
    mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return dim;
}

BigCount gl_superdim(const Partition& lambda, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("gl_superdim: negative rank");
    if (m >= n) return gl_dim(lambda, m - n);
    BigCount d = gl_dim(lambda.conjugate(), n - m);
    return (lambda.weight() % 2 != 0) ? BigCount(-d) : d;
}

BigCount gl_mn_dim(const Partition& lambda, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("gl_mn_dim: negative rank");
    if (lambda.part(m + 1) > n) return 0;
    const Partition conj = lambda.conjugate();
    BigCount total = 0;
    for_each_subpartition(lambda, m, [&](const Partition& mu) {
        BigCount inner = gl_dim(mu, m);
        if (inner == 0) return;
        total += inner * skew_tableau_count(conj, mu.conjugate(), n);
    });
    return total;
}

Rational schur_eval(const Partition& lambda, const RationalPoint& x) {
    if (lambda.length() > static_cast<int>(x.size())) return Rational(0);
    if (lambda.empty()) return Rational(1);
    auto h = complete_homogeneous(x, lambda.part(1) + lambda.length());
    return jt_determinant(lambda, Partition(), h);
}

Rational skew_schur_eval(const Partition& lambda, const Partition& mu, const RationalPoint& x) {
    if (!lambda.contains(mu)) return Rational(0);
    if (lambda.empty()) return Rational(1);
    auto h = complete_homogeneous(x, lambda.part(1) + lambda.length());
    return jt_determinant(lambda, mu, h);
}

Rational super_schur_eval(const Partition& lambda, const RationalPoint& x,
                          const RationalPoint& y) {
    const int m = static_cast<int>(x.size());
    const int n = static_cast<int>(y.size());
    if (lambda.part(m + 1) > n) return Rational(0);
    if (lambda.empty()) return Rational(1);

    const Partition conj = lambda.conjugate();

    if (all_equal_to(x, 1) && all_equal_to(y, 1)) return Rational(gl_mn_dim(lambda, m, n));

    if (all_equal_to(x, 1) && all_equal_to(y, -1)) {
        // s_{lambda'/mu'}((-1)^n) = (-1)^{|lambda|-|mu|} s_{lambda'/mu'}(1^n)
        BigCount total = 0;
        for_each_subpartition(lambda, m, [&](const Partition& mu) {
            BigCount inner = gl_dim(mu, m);
            if (inner == 0) return;
            BigCount piece = inner * skew_tableau_count(conj, mu.conjugate(), n);
            if ((lambda.weight() - mu.weight()) % 2 != 0) piece = -piece;
            total += piece;
        });
        return Rational(total);
    }

    const int max_deg = static_cast<int>(lambda.weight()) + lambda.length() + lambda.part(1);
    auto hx = complete_homogeneous(x, max_deg);
    auto hy = complete_homogeneous(y, max_deg);
    Rational total(0);
    for_each_subpartition(lambda, m, [&](const Partition& mu) {
        Rational inner = jt_determinant(mu, Partition(), hx);
        if (inner == 0) return;
        total += inner * jt_determinant(conj, mu.conjugate(), hy);
    });
    return total;
}

}  // namespace superchar
