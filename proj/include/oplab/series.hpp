#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace oplab {

using BigInt = boost::multiprecision::cpp_int;

struct truncation_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent polynomial in the marker a times an ordinary polynomial in the
// marker x, with arbitrary-precision integer coefficients.  Terms are kept
// sorted by (a, x) with no zero coefficients.
class MarkerPoly {
  public:
    struct Term {
        int a = 0;
        int x = 0;
        BigInt c;

        friend bool operator==(const Term& s, const Term& t) {
            return s.a == t.a && s.x == t.x && s.c == t.c;
        }
    };

    MarkerPoly() = default;
    static MarkerPoly monomial(BigInt c, int a = 0, int x = 0);

    bool zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    void add_term(int a, int x, const BigInt& c);
    MarkerPoly& operator+=(const MarkerPoly& o);
    MarkerPoly& operator-=(const MarkerPoly& o);
    MarkerPoly operator*(const MarkerPoly& o) const;
    MarkerPoly negated() const;

    int min_a() const;
    int max_a() const;
    int max_x() const;
    BigInt coeff(int a, int x = 0) const;

    // True when the polynomial is the plain integer c (a- and x-free).
    bool is_constant(const BigInt& c) const;

    friend bool operator==(const MarkerPoly&, const MarkerPoly&) = default;

  private:
    std::vector<Term> terms_;
};

// Formal power series in q, exact modulo q^{qmax+1}.  Coefficients are
// MarkerPoly values; x-degrees above xmax raise truncation_overflow rather
// than being dropped.  xmax == 0 declares a series without the x marker.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int qmax, int xmax = 0);

    int qmax() const { return qmax_; }
    int xmax() const { return xmax_; }

    static TruncatedSeries zero(int qmax, int xmax = 0) { return TruncatedSeries(qmax, xmax); }
    static TruncatedSeries one(int qmax, int xmax = 0);
    static TruncatedSeries monomial(int qmax, int xmax, const BigInt& c, int qexp, int aexp = 0,
                                    int xexp = 0);

    const MarkerPoly& coeff(int q) const;
    BigInt coeff(int q, int a, int x = 0) const;
    void set_coeff(int q, MarkerPoly p);
    void add_term(int q, int a, int x, const BigInt& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // Multiply by c * a^aexp * x^xexp * q^qexp.
    TruncatedSeries scaled(const BigInt& c, int qexp, int aexp = 0, int xexp = 0) const;

    // Reciprocal / quotient; the divisor's constant coefficient must be +-1.
    TruncatedSeries reciprocal() const;
    TruncatedSeries divided_by(const TruncatedSeries& den) const;

    // x -> x q: each x^p picks up q^p.
    TruncatedSeries substitute_x_with_xq() const;

    // a -> q^aexp (or a -> 0 / a -> 1 via the helpers below), q -> q^qexp.
    // Exponents must stay nonnegative; the caller guarantees the source is
    // deep enough that every surviving target exponent is complete.
    TruncatedSeries specialize(int a_to_qexp, int q_to_qexp, int new_qmax) const;
    TruncatedSeries specialize_a_zero() const;
    TruncatedSeries specialize_a_one() const;

    bool is_zero() const;
    // First q exponent at which the two differ, or -1 when equal through
    // min(qmax, o.qmax).
    int first_difference(const TruncatedSeries& o) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.qmax_ == b.qmax_ && a.coeffs_ == b.coeffs_;
    }

  private:
    int qmax_;
    int xmax_;
    std::vector<MarkerPoly> coeffs_;  // index = q exponent

    void check_x(const MarkerPoly& p) const;
};

struct Monomial {
    BigInt c = 1;
    int a = 0;
    int x = 0;
    int q = 0;
};

// (z; q)_count with z = c a^a x^x q^q.  count == -1 means the infinite
// product, which requires z.q >= 0.
TruncatedSeries poch(int qmax, int xmax, const Monomial& z, int count);

inline TruncatedSeries poch(int qmax, const Monomial& z, int count) {
    return poch(qmax, 0, z, count);
}

// Gaussian binomial [n choose k]_q; zero series when k < 0 or k > n.
TruncatedSeries qbinom(int n, int k, int qmax);

std::string to_string(const MarkerPoly& p);

}  // namespace oplab
