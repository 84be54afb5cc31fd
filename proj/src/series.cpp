#include "oplab/series.hpp"

#include <algorithm>
#include <tuple>

namespace oplab {

MarkerPoly MarkerPoly::monomial(BigInt c, int a, int x) {
    MarkerPoly p;
    if (c != 0) p.terms_.push_back({a, x, std::move(c)});
    return p;
}

void MarkerPoly::add_term(int a, int x, const BigInt& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::tie(a, x),
                               [](const Term& t, const std::tuple<const int&, const int&>& key) {
                                   return std::tie(t.a, t.x) < key;
                               });
    if (it != terms_.end() && it->a == a && it->x == x) {
        it->c += c;
        if (it->c == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {a, x, c});
    }
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& o) {
    for (const Term& t : o.terms_) add_term(t.a, t.x, t.c);
    return *this;
}

MarkerPoly& MarkerPoly::operator-=(const MarkerPoly& o) {
    for (const Term& t : o.terms_) add_term(t.a, t.x, -t.c);
    return *this;
}

MarkerPoly MarkerPoly::operator*(const MarkerPoly& o) const {
    MarkerPoly out;
    for (const Term& s : terms_)
        for (const Term& t : o.terms_) out.add_term(s.a + t.a, s.x + t.x, s.c * t.c);
    return out;
}

MarkerPoly MarkerPoly::negated() const {
    MarkerPoly out = *this;
    for (auto& t : out.terms_) t.c = -t.c;
    return out;
}

int MarkerPoly::min_a() const {
    int m = 0;
    for (const Term& t : terms_) m = std::min(m, t.a);
    return m;
}

int MarkerPoly::max_a() const {
    int m = 0;
    for (const Term& t : terms_) m = std::max(m, t.a);
    return m;
}

int MarkerPoly::max_x() const {
    int m = 0;
    for (const Term& t : terms_) m = std::max(m, t.x);
    return m;
}

BigInt MarkerPoly::coeff(int a, int x) const {
    for (const Term& t : terms_)
        if (t.a == a && t.x == x) return t.c;
    return 0;
}

bool MarkerPoly::is_constant(const BigInt& c) const {
    if (c == 0) return terms_.empty();
    return terms_.size() == 1 && terms_[0].a == 0 && terms_[0].x == 0 && terms_[0].c == c;
}

std::string to_string(const MarkerPoly& p) {
    if (p.zero()) return "0";
    std::string s;
    for (const auto& t : p.terms()) {
        if (!s.empty()) s += " + ";
        s += t.c.str();
        if (t.a != 0) s += "*a^" + std::to_string(t.a);
        if (t.x != 0) s += "*x^" + std::to_string(t.x);
    }
    return s;
}

TruncatedSeries::TruncatedSeries(int qmax, int xmax) : qmax_(qmax), xmax_(xmax) {
    if (qmax < 0) throw std::invalid_argument("series: qmax < 0");
    coeffs_.resize(static_cast<std::size_t>(qmax) + 1);
}

TruncatedSeries TruncatedSeries::one(int qmax, int xmax) {
    TruncatedSeries s(qmax, xmax);
    s.coeffs_[0] = MarkerPoly::monomial(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int qmax, int xmax, const BigInt& c, int qexp, int aexp,
                                          int xexp) {
    TruncatedSeries s(qmax, xmax);
    if (qexp < 0) throw std::invalid_argument("series: negative q exponent");
    if (qexp <= qmax) {
        s.coeffs_[static_cast<std::size_t>(qexp)] = MarkerPoly::monomial(c, aexp, xexp);
        s.check_x(s.coeffs_[static_cast<std::size_t>(qexp)]);
    }
    return s;
}

void TruncatedSeries::check_x(const MarkerPoly& p) const {
    if (p.max_x() > xmax_)
        throw truncation_overflow("x-degree " + std::to_string(p.max_x()) + " exceeds xmax " +
                                  std::to_string(xmax_));
}

const MarkerPoly& TruncatedSeries::coeff(int q) const {
    static const MarkerPoly zero_poly{};
    if (q < 0 || q > qmax_) return zero_poly;
    return coeffs_[static_cast<std::size_t>(q)];
}

BigInt TruncatedSeries::coeff(int q, int a, int x) const { return coeff(q).coeff(a, x); }

void TruncatedSeries::set_coeff(int q, MarkerPoly p) {
    if (q < 0 || q > qmax_) return;
    check_x(p);
    coeffs_[static_cast<std::size_t>(q)] = std::move(p);
}

void TruncatedSeries::add_term(int q, int a, int x, const BigInt& c) {
    if (q < 0 || q > qmax_) return;
    if (x > xmax_) throw truncation_overflow("x-degree exceeds xmax");
    coeffs_[static_cast<std::size_t>(q)].add_term(a, x, c);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    const int lim = std::min(qmax_, o.qmax_);
    for (int q = 0; q <= lim; ++q) coeffs_[static_cast<std::size_t>(q)] += o.coeff(q);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    const int lim = std::min(qmax_, o.qmax_);
    for (int q = 0; q <= lim; ++q) coeffs_[static_cast<std::size_t>(q)] -= o.coeff(q);
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries out = *this;
    out += o;
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries out = *this;
    out -= o;
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(qmax_, o.qmax_), std::max(xmax_, o.xmax_));
    for (int qa = 0; qa <= out.qmax_; ++qa) {
        if (coeff(qa).zero()) continue;
        for (int qb = 0; qa + qb <= out.qmax_; ++qb) {
            if (o.coeff(qb).zero()) continue;
            out.coeffs_[static_cast<std::size_t>(qa + qb)] += coeff(qa) * o.coeff(qb);
        }
    }
    for (const MarkerPoly& p : out.coeffs_) out.check_x(p);
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const BigInt& c, int qexp, int aexp, int xexp) const {
    TruncatedSeries out(qmax_, xmax_);
    if (c == 0) return out;
    const MarkerPoly mono = MarkerPoly::monomial(c, aexp, xexp);
    for (int q = 0; q + qexp <= qmax_; ++q) {
        if (coeff(q).zero()) continue;
        MarkerPoly p = coeff(q) * mono;
        out.check_x(p);
        out.coeffs_[static_cast<std::size_t>(q + qexp)] += p;
    }
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    return one(qmax_, xmax_).divided_by(*this);
}

TruncatedSeries TruncatedSeries::divided_by(const TruncatedSeries& den) const {
    const MarkerPoly& c0 = den.coeff(0);
    BigInt lead;
    if (c0.is_constant(1))
        lead = 1;
    else if (c0.is_constant(-1))
        lead = -1;
    else
        throw std::invalid_argument("series division: constant term must be +-1");
    const int lim = std::min(qmax_, den.qmax_);
    TruncatedSeries out(lim, std::max(xmax_, den.xmax_));
    for (int q = 0; q <= lim; ++q) {
        MarkerPoly acc = coeff(q);
        for (int t = 1; t <= q; ++t) {
            if (den.coeff(t).zero() || out.coeff(q - t).zero()) continue;
            acc -= den.coeff(t) * out.coeff(q - t);
        }
        if (lead == -1) acc = acc.negated();
        out.check_x(acc);
        out.coeffs_[static_cast<std::size_t>(q)] = std::move(acc);
    }
    return out;
}

TruncatedSeries TruncatedSeries::substitute_x_with_xq() const {
    TruncatedSeries out(qmax_, xmax_);
    for (int q = 0; q <= qmax_; ++q)
        for (const auto& t : coeff(q).terms())
            if (q + t.x <= qmax_) out.coeffs_[static_cast<std::size_t>(q + t.x)].add_term(t.a, t.x, t.c);
    return out;
}

TruncatedSeries TruncatedSeries::specialize(int a_to_qexp, int q_to_qexp, int new_qmax) const {
    if (q_to_qexp < 1) throw std::invalid_argument("specialize: q exponent must be >= 1");
    TruncatedSeries out(new_qmax, 0);
    for (int q = 0; q <= qmax_; ++q) {
        for (const auto& t : coeff(q).terms()) {
            if (t.x != 0) throw std::invalid_argument("specialize: series carries x terms");
            const long long e =
                static_cast<long long>(q) * q_to_qexp + static_cast<long long>(t.a) * a_to_qexp;
            if (e < 0) throw std::invalid_argument("specialize: negative exponent");
            if (e <= new_qmax) out.coeffs_[static_cast<std::size_t>(e)].add_term(0, 0, t.c);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::specialize_a_zero() const {
    TruncatedSeries out(qmax_, 0);
    for (int q = 0; q <= qmax_; ++q)
        for (const auto& t : coeff(q).terms()) {
            if (t.x != 0) throw std::invalid_argument("specialize: series carries x terms");
            if (t.a == 0) out.coeffs_[static_cast<std::size_t>(q)].add_term(0, 0, t.c);
        }
    return out;
}

TruncatedSeries TruncatedSeries::specialize_a_one() const {
    TruncatedSeries out(qmax_, 0);
    for (int q = 0; q <= qmax_; ++q)
        for (const auto& t : coeff(q).terms()) {
            if (t.x != 0) throw std::invalid_argument("specialize: series carries x terms");
            out.coeffs_[static_cast<std::size_t>(q)].add_term(0, 0, t.c);
        }
    return out;
}

bool TruncatedSeries::is_zero() const {
    for (const MarkerPoly& p : coeffs_)
        if (!p.zero()) return false;
    return true;
}

int TruncatedSeries::first_difference(const TruncatedSeries& o) const {
    const int lim = std::min(qmax_, o.qmax_);
    for (int q = 0; q <= lim; ++q)
        if (coeff(q) != o.coeff(q)) return q;
    return -1;
}

TruncatedSeries poch(int qmax, int xmax, const Monomial& z, int count) {
    if (count == 0) return TruncatedSeries::one(qmax, xmax);
    if (count < -1) throw std::invalid_argument("poch: bad count");
    if (count == -1 && z.q < 0)
        throw std::invalid_argument("poch: infinite product needs nonnegative q degree");
    TruncatedSeries out = TruncatedSeries::one(qmax, xmax);
    const int upper = count == -1 ? qmax + 1 : count;
    for (int idx = 0; idx < upper; ++idx) {
        const int qe = z.q + idx;
        if (count == -1 && qe > qmax) break;
        if (qe < 0) throw std::invalid_argument("poch: negative q exponent in factor");
        // factor (1 - z q^idx)
        TruncatedSeries factor = TruncatedSeries::one(qmax, xmax);
        if (qe <= qmax) factor.add_term(qe, z.a, z.x, -z.c);
        out = out * factor;
    }
    return out;
}

TruncatedSeries qbinom(int n, int k, int qmax) {
    if (k < 0 || k > n) return TruncatedSeries::zero(qmax);
    const Monomial q1{1, 0, 0, 1};
    TruncatedSeries num = poch(qmax, q1, n);
    TruncatedSeries den = poch(qmax, q1, k) * poch(qmax, q1, n - k);
    return num.divided_by(den);
}

}  // namespace oplab
