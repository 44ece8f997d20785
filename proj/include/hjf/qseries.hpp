// Sparse exact q-series with fractional exponents and precision tracking.
//
// A QSeries stores finitely many terms c * q^(n/den) with c a Gaussian
// rational, plus a rational precision bound P: every exponent e < P is
// determined (absent key = coefficient 0), nothing is claimed at e >= P.
// Exponents may be negative (Laurent tails appear when dividing).
//
// Precision contracts (hard guarantees, not heuristics):
//   add/sub:  min(P_a, P_b)
//   mul:      min(P_a + v_b, P_b + v_a)      v = valuation, or P when empty
//   divide:   min(P_a - v_b, P_b + v_a - 2 v_b)
// The derivative D := q d/dq keeps precision.  All arithmetic is exact at
// every exponent below the tracked bound.

#pragma once

#include "hjf/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hjf {

class QSeries {
  public:
    QSeries() : den_(1), prec_(0) {}

    static QSeries zero(const Rat& prec) { return QSeries(1, {}, prec); }
    static QSeries one(const Rat& prec) { return monomial(0, GaussRat(1), prec); }
    static QSeries monomial(const Rat& exponent, const GaussRat& c, const Rat& prec);

    // Raw constructor; normalizes (drops zeros and out-of-precision terms,
    // minimizes den).  Keys are exponent numerators over `den`.
    QSeries(long long den, std::map<long long, GaussRat> coef, Rat prec);

    long long den() const { return den_; }
    const Rat& prec() const { return prec_; }
    const std::map<long long, GaussRat>& terms() const { return coef_; }

    bool empty() const { return coef_.empty(); }
    size_t term_count() const { return coef_.size(); }

    // Lowest stored exponent, if any term exists.
    std::optional<Rat> valuation() const;
    // Valuation, or the precision bound for the (locally) zero series.
    Rat val_or_prec() const;

    // Coefficient at exponent e; zero if absent.  Throws std::out_of_range
    // when e >= prec (the value is not determined).
    GaussRat coeff(const Rat& e) const;

    bool is_zero() const { return coef_.empty(); }

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;

    QSeries scaled(const GaussRat& c) const;
    QSeries shifted(const Rat& e) const;  // multiply by q^e
    QSeries truncated(const Rat& new_prec) const;  // precision becomes min(prec, new_prec)
    QSeries derived() const;  // D = q d/dq
    QSeries powed(unsigned long e) const;

    std::string to_text(size_t max_terms = 12) const;

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.den_ == b.den_ && a.prec_ == b.prec_ && a.coef_ == b.coef_;
    }

  private:
    long long den_;
    std::map<long long, GaussRat> coef_;
    Rat prec_;

    void normalize();
    // Rewrite to denominator d (a multiple of den_).
    QSeries with_den(long long d) const;
};

// a/b by long division.  Throws std::domain_error when b has no terms within
// its precision.
QSeries divide(const QSeries& a, const QSeries& b);

// Dedekind eta power: q^(n/24) * prod_{j>=1} (1 - q^j)^n, truncated below prec.
QSeries eta_power(long n, const Rat& prec);

// First exponent below min(prec) where the two series differ, with both
// coefficients; nullopt when they agree everywhere both are determined.
struct Mismatch {
    Rat exponent;
    GaussRat lhs, rhs;
};
std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b);

// Equality of all coefficients below the smaller precision bound.
inline bool equal_upto(const QSeries& a, const QSeries& b) {
    return !first_mismatch(a, b).has_value();
}

inline bool is_zero_upto(const QSeries& a) { return a.is_zero(); }

}  // namespace hjf
