// Classical Jacobi form expansions in q = e(tau), zeta = e(z).
//
// A JacobiExpansion stores terms c * q^(n/den) * zeta^r.  Theta series of
// index m and their z = 0 specializations (theta constants) live here, as do
// the development coefficients: D0 (z = 0), the normalized Taylor moments
// psi_v, the heat-corrected second development D2, and Lambda = D0 + (2/m)D2.
//
// Normalization convention (global): u = 2pi*i*z and D = q d/dq, so that all
// development coefficients are rational series.  taylor_psi(phi, v) returns
// sum_r c(n,r) r^v / v! per q-power, i.e. the classical v-th Taylor
// coefficient divided by (2pi*i)^v.

#pragma once

#include "hjf/errors.hpp"
#include "hjf/qseries.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hjf {

class JacobiExpansion {
  public:
    using Key = std::pair<long long, long long>;  // (n numerator over den, r)

    JacobiExpansion() : weight_(0), index_(1), den_(1), prec_(0) {}
    JacobiExpansion(int weight, long long index, long long den,
                    std::map<Key, GaussRat> coef, Rat prec);

    static JacobiExpansion zero(int weight, long long index, const Rat& prec) {
        return JacobiExpansion(weight, index, 1, {}, prec);
    }

    int weight() const { return weight_; }
    long long index() const { return index_; }
    long long den() const { return den_; }
    const Rat& prec() const { return prec_; }
    const std::map<Key, GaussRat>& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    GaussRat coeff(const Rat& n, long long r) const;  // throws out_of_range beyond prec

    JacobiExpansion operator-() const;
    JacobiExpansion operator+(const JacobiExpansion& o) const;  // same index required
    JacobiExpansion operator-(const JacobiExpansion& o) const;
    JacobiExpansion scaled(const GaussRat& c) const;
    // Multiply by a zeta-free series (e.g. a modular form); weight adds j.
    JacobiExpansion scalar_mul(const QSeries& f, int j = 0) const;

    JacobiExpansion with_weight(int k) const;

  private:
    int weight_;
    long long index_;
    long long den_;
    std::map<Key, GaussRat> coef_;
    Rat prec_;

    void normalize();
    JacobiExpansion with_den(long long d) const;
    friend std::optional<Mismatch> jacobi_first_mismatch(const JacobiExpansion&,
                                                         const JacobiExpansion&,
                                                         long long*);
};

// sum_{r ≡ mu (2m)} q^(r^2/4m) zeta^r below precision; weight metadata 0.
JacobiExpansion theta_classical(long long m, long long mu, const Rat& prec);

// Theta constants: a_mu = theta_{2,mu}(tau,0), b_mu = theta_{4,mu}(tau,0),
// the two index-1 constants, and x, y, z built by direct lattice summation
// (x = sum q^(n^2/2), y = sum (-1)^n q^(n^2/2), z = sum_{t in 1/2+Z} q^(t^2/2)).
struct ThetaConstants {
    std::vector<QSeries> a;  // size 4
    std::vector<QSeries> b;  // size 8
    QSeries theta0, theta1;
    QSeries x, y, z;
};
ThetaConstants theta_constants(const Rat& prec);

// D0: set z = 0 (sum the coefficients of each q-power).
QSeries specialize_z0(const JacobiExpansion& phi);

// Normalized v-th Taylor moment; see header comment.
QSeries taylor_psi(const JacobiExpansion& phi, unsigned v);

// Heat-corrected second development coefficient
//   D2 := 2k psi_2 - 2m D(psi_0)
// (k = weight, m = index).  The index factor makes D2 land in S_{k+2} for
// every index, and for m = 1 this is the classical combination.
QSeries dev2(const JacobiExpansion& phi);

// Lambda(m) := D0 + (2/m) D2, as a single q-series sum.
QSeries lambda_op(const JacobiExpansion& phi);

// Theta decomposition phi = sum_{mu mod 2m} H_mu * theta_{m,mu}.  Verifies the
// coefficient-dependence law by resynthesis; throws decomposition_error with
// the first offending (n, r) when the input is not a Jacobi-form expansion.
std::vector<QSeries> theta_decompose_classical(const JacobiExpansion& phi);
JacobiExpansion theta_assemble_classical(int weight, long long m,
                                         const std::vector<QSeries>& comps);

// Every term satisfies 4mn >= r^2.
bool check_support(const JacobiExpansion& phi);

// First (n, r) where the two expansions differ below the common precision;
// r is written to *r_out when given.
std::optional<Mismatch> jacobi_first_mismatch(const JacobiExpansion& a,
                                              const JacobiExpansion& b,
                                              long long* r_out = nullptr);

inline bool jacobi_equal_upto(const JacobiExpansion& a, const JacobiExpansion& b) {
    return !jacobi_first_mismatch(a, b).has_value();
}

}  // namespace hjf
