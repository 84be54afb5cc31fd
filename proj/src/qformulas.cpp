#include "oplab/qformulas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oplab {

namespace {

long long binom2(long long n) { return n * (n - 1) / 2; }  // binom(n, 2), any integer n

const Monomial kQ{1, 0, 0, 1};

// prod_{j=0}^{n-1} (a + q^{off+j}): equals a^n (-q^off / a)_n.
TruncatedSeries rising_a_product(int n, int off, int qmax) {
    TruncatedSeries out = TruncatedSeries::one(qmax);
    for (int j = 0; j < n; ++j) {
        TruncatedSeries factor(qmax, 0);
        factor.add_term(0, 1, 0, 1);
        factor.add_term(off + j, 0, 0, 1);
        out = out * factor;
    }
    return out;
}

// (-aq; q)_n, or the infinite product for n == -1.
TruncatedSeries neg_aq_poch(int n, int qmax) {
    return poch(qmax, 0, Monomial{-1, 1, 0, 1}, n);
}

TruncatedSeries q_poch_inv(int n, int qmax) { return poch(qmax, kQ, n).reciprocal(); }

}  // namespace

TruncatedSeries poch_base(int qmax, int xmax, const Monomial& z, int count, int base) {
    if (base < 1) throw std::invalid_argument("poch_base: base must be >= 1");
    if (count == 0) return TruncatedSeries::one(qmax, xmax);
    if (count < -1) throw std::invalid_argument("poch_base: bad count");
    if (count == -1 && z.q < 0)
        throw std::invalid_argument("poch_base: infinite product needs nonnegative q degree");
    TruncatedSeries out = TruncatedSeries::one(qmax, xmax);
    const int upper = count == -1 ? qmax + 1 : count;
    for (int idx = 0; idx < upper; ++idx) {
        const long long qe = z.q + static_cast<long long>(base) * idx;
        if (count == -1 && qe > qmax) break;
        if (qe < 0) throw std::invalid_argument("poch_base: negative q exponent in factor");
        TruncatedSeries factor = TruncatedSeries::one(qmax, xmax);
        if (qe <= qmax) factor.add_term(static_cast<int>(qe), z.a, z.x, -z.c);
        out = out * factor;
    }
    return out;
}

TruncatedSeries triple_product(int r, int m, int qmax) {
    TruncatedSeries out = poch_base(qmax, 0, Monomial{1, 0, 0, r}, -1, m);
    out = out * poch_base(qmax, 0, Monomial{1, 0, 0, m - r}, -1, m);
    out = out * poch_base(qmax, 0, Monomial{1, 0, 0, m}, -1, m);
    return out;
}

bool jacobi_triple_product_check(int c, int e, int m, int qmax) {
    if (c != 1 && c != -1) throw std::invalid_argument("jtp: coefficient must be +-1");
    if (m < 1) throw std::invalid_argument("jtp: base must be >= 1");
    if (e > 0) throw std::invalid_argument("jtp: exponent of z must be <= 0");
    // (-1/z, -zq, q; q)_inf under q -> q^m.
    TruncatedSeries prod = poch_base(qmax, 0, Monomial{-c, 0, 0, -e}, -1, m);
    prod = prod * poch_base(qmax, 0, Monomial{-c, 0, 0, e + m}, -1, m);
    prod = prod * poch_base(qmax, 0, Monomial{1, 0, 0, m}, -1, m);

    TruncatedSeries sum(qmax, 0);
    for (int n = 0;; ++n) {
        const long long exp = static_cast<long long>(e) * n + m * binom2(n + 1);
        if (exp < 0) throw std::logic_error("jtp: negative exponent");
        if (exp > qmax) break;
        sum.add_term(static_cast<int>(exp), 0, 0, (n % 2 == 0 || c == 1) ? 1 : -1);
    }
    for (int n = -1;; --n) {
        const long long exp = static_cast<long long>(e) * n + m * binom2(n + 1);
        if (exp < 0) throw std::logic_error("jtp: negative exponent");
        if (exp > qmax) break;
        sum.add_term(static_cast<int>(exp), 0, 0, ((-n) % 2 == 0 || c == 1) ? 1 : -1);
    }
    return prod.first_difference(sum) == -1;
}

TruncatedSeries overpartition_gf(int qmax) {
    TruncatedSeries num = poch(qmax, 0, Monomial{-1, 1, 0, 1}, -1);  // (-aq)_inf
    return num.divided_by(poch(qmax, kQ, -1));
}

TruncatedSeries path_series(int k, int i, int qmax) {
    if (k < 1 || i < 1 || i > k) throw std::invalid_argument("path_series: need 1 <= i <= k");
    TruncatedSeries prefix = overpartition_gf(qmax);
    TruncatedSeries sum(qmax, 0);

    // Positive branch q^{k n^2 + (k-i+1) n}, negative branch folded to
    // q^{k m^2 - (k-i) m} with positive Pochhammer indices.
    TruncatedSeries rising = TruncatedSeries::one(qmax);     // prod (a + q^j)
    TruncatedSeries denom_inv = TruncatedSeries::one(qmax);  // 1 / (-aq)_n
    for (int n = 0;; ++n) {
        if (n > 0) {
            TruncatedSeries factor(qmax, 0);
            factor.add_term(0, 1, 0, 1);
            factor.add_term(n - 1, 0, 0, 1);
            rising = rising * factor;
            TruncatedSeries pf = TruncatedSeries::one(qmax);
            pf.add_term(n, 1, 0, 1);
            denom_inv = denom_inv.divided_by(pf);
        }
        const long long ep = static_cast<long long>(k) * n * n + static_cast<long long>(k - i + 1) * n;
        const long long em = static_cast<long long>(k) * n * n - static_cast<long long>(k - i) * n;
        if (ep > qmax && (n == 0 || em > qmax)) break;
        const int sign = n % 2 == 0 ? 1 : -1;
        if (ep <= qmax)
            sum += (rising * denom_inv).scaled(sign, static_cast<int>(ep));
        if (n >= 1 && em <= qmax)
            sum += (rising * denom_inv).scaled(sign, static_cast<int>(em));
    }
    return prefix * sum;
}

TruncatedSeries npeaks_series(int k, int i, int N, int qmax) {
    if (k < 1 || i < 1 || i > k || N < 0) throw std::invalid_argument("npeaks_series: bad arguments");
    const long long lead = binom2(N + 1);
    TruncatedSeries out(qmax, 0);
    if (lead > qmax) return out;
    std::map<int, TruncatedSeries> poch_inv;
    for (int t = 0; t <= 2 * N; ++t) poch_inv.emplace(t, q_poch_inv(t, qmax));
    for (int n = -N; n <= N; ++n) {
        const long long e = lead + static_cast<long long>(k) * n * n +
                            static_cast<long long>(n) * (k - i) - binom2(n);
        if (e < 0) throw std::logic_error("npeaks_series: negative exponent");
        if (e > qmax) continue;
        TruncatedSeries term = poch_inv.at(N - n) * poch_inv.at(N + n);
        out += term.scaled((n % 2 == 0) ? 1 : -1, static_cast<int>(e));
    }
    return rising_a_product(N, 0, qmax) * out;
}

TruncatedSeries npeaks_aux_series(int k, int i, int N, int qmax) {
    if (k < 1 || i < 0 || i > k || N < 0)
        throw std::invalid_argument("npeaks_aux_series: bad arguments");
    TruncatedSeries out(qmax, 0);
    if (N == 0) return out;
    const long long lead = binom2(N);
    if (lead > qmax) return out;
    std::map<int, TruncatedSeries> poch_inv;
    for (int t = 0; t <= 2 * N; ++t) poch_inv.emplace(t, q_poch_inv(t, qmax));
    for (int n = -N; n <= N - 1; ++n) {
        const long long e = lead + static_cast<long long>(k) * n * n +
                            static_cast<long long>(n) * (k - i) - binom2(n + 1);
        if (e < 0) throw std::logic_error("npeaks_aux_series: negative exponent");
        if (e > qmax) continue;
        TruncatedSeries term = poch_inv.at(N - n - 1) * poch_inv.at(N + n);
        out += term.scaled((n % 2 == 0) ? 1 : -1, static_cast<int>(e));
    }
    return rising_a_product(N, 0, qmax) * out;
}

RecurrenceTables npeaks_by_recurrence(int k, int nmax, int qmax) {
    if (k < 2) throw std::invalid_argument("npeaks_by_recurrence: k >= 2");
    RecurrenceTables t;
    t.e.assign(static_cast<std::size_t>(k) + 1,
               std::vector<TruncatedSeries>(static_cast<std::size_t>(nmax) + 1,
                                            TruncatedSeries::zero(qmax)));
    t.g.assign(static_cast<std::size_t>(k),
               std::vector<TruncatedSeries>(static_cast<std::size_t>(nmax) + 1,
                                            TruncatedSeries::zero(qmax)));
    for (int i = 1; i <= k; ++i) t.e[static_cast<std::size_t>(i)][0] = TruncatedSeries::one(qmax);
    for (int N = 1; N <= nmax; ++N) {
        for (int i = 1; i <= k - 1; ++i) {
            const TruncatedSeries& prev = t.e[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(N - 1)];
            TruncatedSeries gi = t.g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(N)].scaled(1, N);
            gi += prev.scaled(1, 0, 1);      // a * E_{k,i+1}(N-1)
            gi += prev.scaled(1, N - 1);     // q^{N-1} * E_{k,i+1}(N-1)
            t.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(N)] = std::move(gi);
        }
        // E_{k,k}(N) = q^N/(1-q^N) * G_{k,k-1}(N)
        TruncatedSeries geom(qmax, 0);
        for (long long e = N; e <= qmax; e += N) geom.add_term(static_cast<int>(e), 0, 0, 1);
        t.e[static_cast<std::size_t>(k)][static_cast<std::size_t>(N)] =
            t.g[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(N)] * geom;
        for (int i = k - 1; i >= 1; --i) {
            TruncatedSeries ei = t.e[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(N)] +
                                 t.g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(N)];
            t.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(N)] = ei.scaled(1, N);
        }
    }
    return t;
}

namespace {

struct DurfeeSum {
    int k, i, qmax;
    TruncatedSeries total;
    std::map<std::pair<int, int>, TruncatedSeries> qbinom_cache;

    const TruncatedSeries& qb(int n, int r) {
        auto key = std::make_pair(n, r);
        auto it = qbinom_cache.find(key);
        if (it == qbinom_cache.end()) it = qbinom_cache.emplace(key, qbinom(n, r, qmax)).first;
        return it->second;
    }

    // Blocks j = 2..k-1; partial holds everything up to block j-1.
    void rec(int j, int prev, long long min_q, const TruncatedSeries& partial) {
        if (j > k - 1) {
            total += partial;
            return;
        }
        for (int nj = 0; nj <= prev; ++nj) {
            const long long extra = static_cast<long long>(nj) * nj + (j >= i ? nj : 0);
            if (min_q + extra > qmax) continue;
            TruncatedSeries next = partial * qb(prev, nj).scaled(1, static_cast<int>(extra));
            rec(j + 1, nj, min_q + extra, next);
        }
    }
};

}  // namespace

TruncatedSeries durfee_series(int k, int i, int qmax) {
    if (k < 2 || i < 1 || i > k) throw std::invalid_argument("durfee_series: need k >= 2, 1 <= i <= k");
    DurfeeSum ds{k, i, qmax, TruncatedSeries(qmax, 0), {}};
    for (int n1 = 0; binom2(n1 + 1) <= qmax; ++n1) {
        const long long lead = binom2(n1 + 1) + (i == 1 ? n1 : 0);
        if (lead > qmax) continue;
        TruncatedSeries head =
            rising_a_product(n1, 0, qmax) * q_poch_inv(n1, qmax);
        ds.rec(2, n1, lead, head.scaled(1, static_cast<int>(lead)));
    }
    return ds.total;
}

int default_xmax(int k, int qmax) { return qmax + k; }

TruncatedSeries h_series(int k, int i, int qmax, int xmax) {
    if (k < 2 || i < 0 || i > k) throw std::invalid_argument("h_series: need k >= 2, 0 <= i <= k");
    TruncatedSeries total(qmax, xmax);
    if (i == 0) return total;

    // n = 0: (1 + x + ... + x^{i-1}) (a x q)_inf / (x q)_inf.
    {
        TruncatedSeries geo(qmax, xmax);
        for (int t = 0; t < i; ++t) {
            if (t > xmax) throw truncation_overflow("h_series: i exceeds xmax");
            geo.add_term(0, 0, t, 1);
        }
        TruncatedSeries term = geo * poch(qmax, xmax, Monomial{1, 1, 1, 1}, -1);
        term = term.divided_by(poch(qmax, xmax, Monomial{1, 0, 1, 1}, -1));
        total += term;
    }

    for (int n = 1;; ++n) {
        const long long lead = static_cast<long long>(k) * n * n + n - static_cast<long long>(i) * n;
        if (lead > qmax) break;
        // q^lead x^{kn} a^n (1 - x^i q^{2ni}) (a x q^{n+1})_inf a^{-n}(a - q^j)... / ((q)_n (x q^n)_inf)
        TruncatedSeries term = TruncatedSeries::monomial(qmax, xmax, 1, static_cast<int>(lead),
                                                         n, k * n);
        TruncatedSeries bracket = TruncatedSeries::one(qmax, xmax);
        const long long sub = 2ll * n * i;
        if (sub <= qmax) {
            TruncatedSeries m2 = TruncatedSeries::monomial(qmax, xmax, -1, static_cast<int>(sub), 0, i);
            bracket += m2;
        }
        term = term * bracket;
        term = term * poch(qmax, xmax, Monomial{1, 1, 1, n + 1}, -1);
        // (1/a)_n a^n / a^n: multiply by prod_{j=0}^{n-1}(1 - q^j / a) = a^{-n} prod (a - q^j).
        TruncatedSeries falling = TruncatedSeries::one(qmax, xmax);
        for (int j = 0; j < n; ++j) {
            TruncatedSeries factor(qmax, xmax);
            factor.add_term(0, 0, 0, 1);
            factor.add_term(j, -1, 0, -1);
            falling = falling * factor;
        }
        term = term * falling;
        term = term.divided_by(poch(qmax, xmax, kQ, n));
        term = term.divided_by(poch(qmax, xmax, Monomial{1, 0, 1, n}, -1));
        total += term;
    }
    return total;
}

TruncatedSeries j_series(int k, int i, int qmax, int xmax) {
    if (k < 2 || i < 1 || i > k) throw std::invalid_argument("j_series: need k >= 2, 1 <= i <= k");
    TruncatedSeries out = h_series(k, i, qmax, xmax).substitute_x_with_xq();
    TruncatedSeries lower = h_series(k, i - 1, qmax, xmax).substitute_x_with_xq();
    out -= lower.scaled(1, 1, 1, 1);  // a x q * H_{k,i-1}(a, xq, q)
    return out;
}

TruncatedSeries durfee_stratum_series(int n, int N, int qmax) {
    if (n < 0) return durfee_stratum_series(-n, N, qmax);
    if (N < n) throw std::invalid_argument("durfee_stratum_series: need N >= |n|");
    const long long lead = binom2(N + 1) - binom2(n + 1);
    TruncatedSeries out(qmax, 0);
    if (lead > qmax) return out;
    TruncatedSeries term = neg_aq_poch(n, qmax) * rising_a_product(N - n, n, qmax);
    term = term * q_poch_inv(N + n, qmax) * q_poch_inv(N - n, qmax);
    return term.scaled(1, static_cast<int>(lead));
}

int durfee_stratification_check(int n, int qmax) {
    TruncatedSeries sum(qmax, 0);
    for (int N = std::abs(n); binom2(N + 1) - binom2(std::abs(n) + 1) <= qmax; ++N)
        sum += durfee_stratum_series(n, N, qmax);
    return sum.first_difference(overpartition_gf(qmax));
}

TruncatedSeries product_series(ProductFamily f, int k, int i, int qmax) {
    if (k < 2 || i < 1 || i > k) throw std::invalid_argument("product_series: need k >= 2, 1 <= i <= k");
    const TruncatedSeries qinf_inv = poch(qmax, kQ, -1).reciprocal();
    switch (f) {
        case ProductFamily::andrews_gordon:
            return triple_product(i, 2 * k + 1, qmax) * qinf_inv;
        case ProductFamily::gollnitz_gordon: {
            TruncatedSeries out = poch_base(qmax, 0, Monomial{1, 0, 0, 2}, -1, 4);
            out = out * triple_product(2 * i - 1, 4 * k, qmax);
            return out * qinf_inv;
        }
        case ProductFamily::gordon_overpartitions: {
            TruncatedSeries sum(qmax, 0);
            for (int j = 0; j <= 2 * (k - i); ++j) {
                TruncatedSeries tp = triple_product(i + j, 2 * k, qmax);
                if (j % 2 == 0)
                    sum += tp;
                else
                    sum -= tp;
            }
            return poch(qmax, 0, Monomial{-1, 0, 0, 1}, -1) * qinf_inv * sum;
        }
        case ProductFamily::gordon_shifted: {
            TruncatedSeries sum = triple_product(i, 2 * k, qmax);
            sum += poch_base(qmax, 0, Monomial{1, 0, 0, i - 1}, -1, 2 * k) *
                   poch_base(qmax, 0, Monomial{1, 0, 0, 2 * k + 1 - i}, -1, 2 * k) *
                   poch_base(qmax, 0, Monomial{1, 0, 0, 2 * k}, -1, 2 * k);
            return poch(qmax, 0, Monomial{-1, 0, 0, 1}, -1) * qinf_inv * sum;
        }
    }
    throw std::logic_error("product_series: bad family");
}

namespace {

// Largest overline count possible at a given weight.
int max_overlines(int n) {
    int j = 0;
    while ((j + 1) * (j + 2) / 2 <= n) ++j;
    return j;
}

}  // namespace

TruncatedSeries specialized_path_series(ProductFamily f, int k, int i, int qmax) {
    switch (f) {
        case ProductFamily::andrews_gordon:
            return path_series(k, i, qmax).specialize_a_zero();
        case ProductFamily::gollnitz_gordon:
            // target exponent 2n - j with j <= n, so source depth qmax suffices
            return path_series(k, i, qmax).specialize(-1, 2, qmax);
        case ProductFamily::gordon_overpartitions:
            return path_series(k, i, qmax).specialize_a_one();
        case ProductFamily::gordon_shifted: {
            // target exponent n - j; weights beyond src cannot reach the
            // window once n - max_overlines(n) exceeds it
            int src = qmax;
            while (src + 1 - max_overlines(src + 1) <= qmax) ++src;
            return path_series(k, i, src).specialize(-1, 1, qmax);
        }
    }
    throw std::logic_error("specialized_path_series: bad family");
}

}  // namespace oplab
