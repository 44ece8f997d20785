// Elliptic modular forms on SL(2,Z): E4, E6, Delta, echelon bases of M_k and
// S_k, exact membership tests, dimension/rank formulas, and the alternating
// dimension audits used by the verification suites.
//
// Dimension tags accepted by dims():
//   "mk"           dim M_k (level 1), even k
//   "sk"           dim S_k
//   "jf1".."jf4"   classical Jacobi forms J_{k,m}, even k only
//                  (dim M_k + sum_{v=1..m} dim S_{k+2v})
//   "hjf1","hjf2"  Hermitian Jacobi forms over Z[i], index 1 and 2
// Values outside a formula's validity range raise unsupported_range.

#pragma once

#include "hjf/errors.hpp"
#include "hjf/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hjf {

// Normalized Eisenstein series, k in {4, 6}.
QSeries eisenstein(int k, const Rat& prec);

// Discriminant cusp form; equals (E4^3 - E6^2)/1728 (tested), built as eta^24.
QSeries delta(const Rat& prec);

int dim_mk(int k);
int dim_sk(int k);

// Dimension by tag; see header comment.
long long dims(int k, const std::string& space);

// Module rank of the even-weight-graded Hermitian Jacobi modules:
// rank(4, m) = m^2 + 2 (weights 0 mod 4), rank(2, m) = 2(m^2 + 1) (all even).
long long rank(int n, long long m);

// Echelonized basis of M_k or S_k: elements Delta^j E4^a E6^b with strictly
// increasing valuation j, so leading exponents are 0, 1, 2, ...
struct SpaceBasis {
    int weight = 0;
    bool cusp = false;
    std::vector<QSeries> elems;
    // Minimum precision for trustworthy membership decisions in this space.
    Rat decision_bound() const;
};

SpaceBasis basis_mk(int k, const Rat& prec);
SpaceBasis basis_sk(int k, const Rat& prec);

struct MembershipResult {
    bool member = false;
    std::vector<GaussRat> coords;        // on success, coordinates in basis order
    std::optional<Rat> fail_exponent;    // on failure, first nonzero residual exponent
    GaussRat fail_coeff;
};

// Decide f in span(basis) by forward substitution on the echelon leading
// exponents, then verify the full residual below the common precision.
// Requires precision >= basis.decision_bound() on f and every basis element.
MembershipResult membership(const QSeries& f, const SpaceBasis& basis);

// Exact rank of a matrix over Q(i) (rows = vectors), by Gaussian elimination.
int matrix_rank(std::vector<std::vector<GaussRat>> rows);

// One audit line: label, sign in the alternating sum, dimension value.
struct AuditTerm {
    std::string label;
    int sign = 1;
    long long value = 0;
};

struct AuditReport {
    std::string audit;
    int k = 0;
    std::vector<AuditTerm> terms;
    long long sum = 0;
    bool pass = false;
};

// Alternating dimension sums for the exact sequences and identities.
// Tags: "index1-2mod4", "index1-0mod4", "index1-chain", "restrict-iso-0mod4",
//       "ker-2mod4", "pair-0mod4", "index4-chain", "odd-3mod4", "odd-1mod4",
//       "minweights".
AuditReport sequence_audit(const std::string& tag, int k);

}  // namespace hjf
