// Three-variable expansions of Hermitian Jacobi forms over Z[i].
//
// A HermitianExpansion stores terms c(n, r) * q^(n/den) * e(r z1 + conj(r) z2)
// with r = (x + iy)/2 kept in doubled integer coordinates (lattice.hpp).
// Assembled forms satisfy the support law n*m >= N(r).
//
// The theta decomposition writes phi = sum_{s in classes mod m Z[i]} h_s *
// theta_{m,s} with h_s a q-series supported on exponents e with
// e + N(s)/m integral; extract/assemble convert between the two views and
// validate the laws, so every "is a form-shaped object" check in the suites
// reduces to exact series identities.
//
// Development coefficients are normalized as in jacobi.hpp: u_j = 2 pi i z_j,
// D = q d/dq; chi_{a,b} here means the classical coefficient divided by
// (2 pi i)^(a+b), which keeps everything in Q(i).

#pragma once

#include "hjf/errors.hpp"
#include "hjf/jacobi.hpp"
#include "hjf/lattice.hpp"
#include "hjf/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hjf {

struct HKey {
    long long n = 0;  // exponent numerator over den
    HalfPoint r;

    friend bool operator==(const HKey&, const HKey&) = default;
    auto operator<=>(const HKey& o) const {
        return std::tie(n, r.x, r.y) <=> std::tie(o.n, o.r.x, o.r.y);
    }
};

struct HermMismatch;

class HermitianExpansion {
  public:
    HermitianExpansion() : weight_(0), index_(1), den_(1), prec_(0) {}
    HermitianExpansion(int weight, long long index, long long den,
                       std::map<HKey, GaussRat> coef, Rat prec);

    static HermitianExpansion zero(int weight, long long index, const Rat& prec) {
        return HermitianExpansion(weight, index, 1, {}, prec);
    }

    int weight() const { return weight_; }
    long long index() const { return index_; }
    long long den() const { return den_; }
    const Rat& prec() const { return prec_; }
    const std::map<HKey, GaussRat>& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    GaussRat coeff(const Rat& n, const HalfPoint& r) const;

    HermitianExpansion operator-() const;
    HermitianExpansion operator+(const HermitianExpansion& o) const;  // same index
    HermitianExpansion operator-(const HermitianExpansion& o) const;
    HermitianExpansion scaled(const GaussRat& c) const;
    HermitianExpansion with_weight(int k) const;

  private:
    int weight_;
    long long index_;
    long long den_;
    std::map<HKey, GaussRat> coef_;
    Rat prec_;

    void normalize();
    HermitianExpansion with_den(long long d) const;
    friend std::optional<HermMismatch> hermitian_first_mismatch(const HermitianExpansion&,
                                                                const HermitianExpansion&);
};

struct HermMismatch {
    Rat exponent;
    HalfPoint r;
    GaussRat lhs, rhs;
};
std::optional<HermMismatch> hermitian_first_mismatch(const HermitianExpansion& a,
                                                     const HermitianExpansion& b);
inline bool hermitian_equal_upto(const HermitianExpansion& a, const HermitianExpansion& b) {
    return !hermitian_first_mismatch(a, b).has_value();
}

// Components of the theta decomposition, keyed by canonical class.
struct ComponentVector {
    int weight = 0;
    long long index = 1;
    std::map<Rep, QSeries> comps;  // all 4m^2 classes present
};

// Direct lattice sum over r ≡ s (mod m Z[i]), N(r)/m below precision.
// Weight metadata 1 (rank-2 lattice theta); the builders never read it.
HermitianExpansion theta_hermitian(long long m, const Rep& s, const Rat& prec);

// Theta decomposition and its inverse.  extract validates that coefficients
// depend only on (4mn - 4N(r), r mod m Z[i]) by resynthesis; assemble
// validates non-negative component exponents and the grid law
// e + N(s)/m integral.  Both throw on violation.
ComponentVector extract(const HermitianExpansion& phi);
HermitianExpansion assemble(const ComponentVector& cv, const Rat& zero_comp_prec);
HermitianExpansion assemble(const ComponentVector& cv);

// assemble without the grid-law check: accepts component vectors whose
// exponents merely land on the theta grid of each class (used when reading
// serialized bare theta series, which are not forms).
HermitianExpansion assemble_unchecked(const ComponentVector& cv);

// Every stored term satisfies n*m >= N(r).
bool check_support_hermitian(const HermitianExpansion& phi);

// Unit-law verification h_{i^e s} = i^{-e k} h_s for e = 1, 2, 3 and all
// classes, plus (index 2) the named equality families of the weight class.
struct SymmetryReport {
    bool pass = false;
    int char_label = 0;  // alpha with i^alpha = i^{-k}: the character class
    std::vector<std::string> violations;
    std::vector<std::pair<std::string, bool>> families;  // index-2 named relations
};
SymmetryReport check_symmetries(const HermitianExpansion& phi);

// pi_rho: (z1, z2) -> (rho z, conj(rho) z); index m -> N(rho) m.
// rho given as a Gaussian integer (ra, rb) != 0.
JacobiExpansion restrict_to(const HermitianExpansion& phi, long long ra, long long rb);

// U_{1+i}: (z1, z2) -> ((1+i) z1, (1-i) z2); index m -> 2m, term (n, r) -> (n, (1+i) r).
HermitianExpansion u_raise(const HermitianExpansion& phi);

// Normalized Taylor coefficient sum_r c(n,r) r^a conj(r)^b / (a! b!) per q-power.
QSeries taylor_chi(const HermitianExpansion& phi, unsigned a, unsigned b);

// Sixth moment in the doubled coordinate: sum_r c(n,r) (2r)^6 per q-power,
// with 2r = x + iy a Gaussian integer.  Equals 2^6 * 6! * taylor_chi(6,0);
// this scaling makes the index-2 theta-difference identity hold with the
// integer constant 1024 and the kernel-builder scalar come out at 1440.
QSeries d06(const HermitianExpansion& phi);

// Cuspidal development combinations for index-1 forms of weight k:
//   xi11 = chi_{1,1} - (1/k) D chi_{0,0}                  (lands in S_{k+2})
//   xi22 = chi_{2,2} - (1/(k+2)) D chi_{1,1}
//          + (1/(2(k+1)(k+2))) D^2 chi_{0,0}              (lands in S_{k+4})
QSeries xi11(const HermitianExpansion& phi);
QSeries xi22(const HermitianExpansion& phi);

// Character projection for index 2: P_alpha = (1/4) sum_mu eta_alpha(mu)^{-1} W_mu,
// where W_mu relabels components h_s -> h_{mu s} and eta_alpha(i^x) = i^{alpha x}.
// Projections over alpha = 0..3 sum to phi; a genuine weight-k form lies in
// the class alpha ≡ -k (mod 4).
HermitianExpansion char_project(const HermitianExpansion& phi, int alpha);

// Component relabeling W_mu itself (mu = i^e).
HermitianExpansion unit_relabel(const HermitianExpansion& phi, long e);

// Products: indices add, weights add (scalar: index unchanged, weight + j).
HermitianExpansion mul_hjf(const HermitianExpansion& a, const HermitianExpansion& b);
HermitianExpansion scalar_mul(const QSeries& f, const HermitianExpansion& phi, int j = 0);

// Index-1 construction for weight k ≡ 2 (mod 4) from a cusp form f in S_{k+2}:
// h_{(0,1)} = fhat / xi with xi = theta1 D theta0 - theta0 D theta1 and fhat
// the leading-coefficient normalization of f; the other components follow
// from the unit law (h_{(1,0)} = -h_{(0,1)}, diagonals vanish).
HermitianExpansion build_index1_2mod4(int k, const QSeries& f);

// Index-2 kernel-of-pi_1 construction for weight k ≡ 2 (mod 4):
// psi = fhat / eta^15 from f in S_{k+6} drives the column
// h_{(0,1)} = psi a_2, h_{(0,2)} = -2 psi a_1, h_{(1,2)} = psi a_0, and
// g in S_{k+2} (may be the zero series) drives h_{(1,1)} = ghat / xi;
// all remaining components follow from the unit law.
HermitianExpansion build_ker_pi1_2mod4(int k, const QSeries& f, const QSeries& g);

// Named forms: "phi41" (weight 4, index 1), "phi42" = U_{1+i} phi41,
// "phi42tilde" (the independent partner of phi42 in weight 4, index 2).
HermitianExpansion build_named(const std::string& name, const Rat& prec);

// Minimal a+b with chi_{a,b} not identically zero, scanning a+b <= 2m+4;
// nullopt for the zero expansion.  Throws std::domain_error if a nonzero
// expansion shows no nonvanishing coefficient within the scan bound.
std::optional<int> order_vanishing(const HermitianExpansion& phi);

}  // namespace hjf
