#include "hjf/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace hjf {

namespace {

// sigma_{e}(n) as an exact integer.
mpz_class divisor_power_sum(long long n, unsigned e) {
    mpz_class total = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), e);
        total += t;
        long long q = n / d;
        if (q != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(q), e);
            total += t;
        }
    }
    return total;
}

}  // namespace

QSeries eisenstein(int k, const Rat& prec) {
    if (k != 4 && k != 6) throw std::invalid_argument("eisenstein: only k = 4 and k = 6");
    const long factor = (k == 4) ? 240 : -504;
    const unsigned e = (k == 4) ? 3 : 5;
    std::map<long long, GaussRat> m;
    m.emplace(0, GaussRat(1));
    for (long long n = 1; rat(n) < prec; ++n)
        m.emplace(n, GaussRat(Rat(factor * divisor_power_sum(n, e))));
    return QSeries(1, std::move(m), prec);
}

QSeries delta(const Rat& prec) { return eta_power(24, prec); }

int dim_mk(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    return (k % 12 == 2) ? k / 12 : k / 12 + 1;
}

int dim_sk(int k) {
    if (k < 4 || k % 2 != 0) return 0;
    return dim_mk(k) - 1;
}

long long dims(int k, const std::string& space) {
    if (space == "mk") return dim_mk(k);
    if (space == "sk") return dim_sk(k);
    if (space.size() == 3 && space.compare(0, 2, "jf") == 0 && space[2] >= '1' && space[2] <= '4') {
        // dim J_{k,m} = dim M_k + sum_{v=1}^{m} dim S_{k+2v}; quoted for even k >= 2.
        if (k < 2 || k % 2 != 0)
            throw unsupported_range("dims: classical Jacobi dimensions are available for even k >= 2");
        int m = space[2] - '0';
        long long total = dim_mk(k);
        for (int v = 1; v <= m; ++v) total += dim_sk(k + 2 * v);
        return total;
    }
    if (space == "hjf1") {
        if (k < 2) throw unsupported_range("dims: hjf1 requires k >= 2");
        if (k % 4 == 2) return (k + 2) / 12;
        if (k % 4 == 0) return k / 4;
        throw unsupported_range("dims: hjf1 is quoted for even k only");
    }
    if (space == "hjf2") {
        if (k < 1) throw unsupported_range("dims: hjf2 requires k >= 1");
        switch (k % 4) {
            case 0: return (k >= 4) ? k / 2 : 0;
            case 2: return (k - 1) / 3;
            case 3: return (k - 3) / 4;
            default: return std::max(0, (k - 5) / 4);  // k ≡ 1 (mod 4)
        }
    }
    throw std::invalid_argument("dims: unknown space tag '" + space + "'");
}

long long rank(int n, long long m) {
    if (m < 1) throw std::invalid_argument("rank: index m must be >= 1");
    if (n == 4) return m * m + 2;
    if (n == 2) return 2 * (m * m + 1);
    throw std::invalid_argument("rank: weight gradation must be 2 or 4");
}

Rat SpaceBasis::decision_bound() const {
    return Rat(static_cast<long>(elems.size()) + weight / 12 + 2);
}

namespace {

SpaceBasis monomial_basis(int k, bool cusp, const Rat& prec) {
    if (k < 0 || k % 2 != 0)
        throw unsupported_range("basis: even non-negative weight required");
    SpaceBasis basis;
    basis.weight = k;
    basis.cusp = cusp;
    const int dim = cusp ? dim_sk(k) : dim_mk(k);
    if (dim == 0) return basis;
    const QSeries e4 = eisenstein(4, prec);
    const QSeries e6 = eisenstein(6, prec);
    const QSeries dl = delta(prec);
    const int j0 = cusp ? 1 : 0;
    for (int j = j0; j < j0 + dim; ++j) {
        int w = k - 12 * j;
        int b = (w % 4 == 0) ? 0 : 1;  // w ≡ 2 (mod 4) needs one E6 factor
        int a = (w - 6 * b) / 4;
        QSeries elem = QSeries::one(prec);
        if (j > 0) elem = dl.powed(static_cast<unsigned long>(j));
        if (a > 0) elem = elem * e4.powed(static_cast<unsigned long>(a));
        if (b > 0) elem = elem * e6;
        basis.elems.push_back(elem.truncated(prec));
    }
    return basis;
}

}  // namespace

SpaceBasis basis_mk(int k, const Rat& prec) { return monomial_basis(k, false, prec); }
SpaceBasis basis_sk(int k, const Rat& prec) { return monomial_basis(k, true, prec); }

MembershipResult membership(const QSeries& f, const SpaceBasis& basis) {
    Rat p = f.prec();
    for (const auto& e : basis.elems) p = std::min(p, e.prec());
    if (p < basis.decision_bound())
        throw std::domain_error("membership: precision " + rat_to_string(p) +
                                " below the decision bound " +
                                rat_to_string(basis.decision_bound()));
    MembershipResult out;
    QSeries residual = f.truncated(p);
    for (const auto& e : basis.elems) {
        Rat pivot = *e.valuation();  // integer j for Delta^j E4^a E6^b, monic
        GaussRat c = residual.coeff(pivot);
        out.coords.push_back(c);
        if (!c.is_zero()) residual = residual - e.truncated(p).scaled(c);
    }
    if (residual.is_zero()) {
        out.member = true;
    } else {
        out.fail_exponent = *residual.valuation();
        out.fail_coeff = residual.coeff(*out.fail_exponent);
    }
    return out;
}

int matrix_rank(std::vector<std::vector<GaussRat>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("matrix_rank: ragged matrix");
    int rank_count = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            GaussRat factor = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
        }
        ++row;
        ++rank_count;
    }
    return rank_count;
}

namespace {

void require_class(int k, int mod, int residue, const std::string& tag) {
    if (((k % mod) + mod) % mod != residue)
        throw unsupported_range("sequence_audit: weight " + std::to_string(k) +
                                " outside the congruence class of '" + tag + "'");
}

AuditReport finish(AuditReport r) {
    r.sum = 0;
    for (const auto& t : r.terms) r.sum += t.sign * t.value;
    r.pass = (r.sum == 0);
    return r;
}

}  // namespace

AuditReport sequence_audit(const std::string& tag, int k) {
    AuditReport r;
    r.audit = tag;
    r.k = k;
    auto dim_label = [](const std::string& space, int kk) {
        return space + "(" + std::to_string(kk) + ")";
    };
    if (tag == "index1-2mod4") {
        // 0 -> hermitian index 1 -> classical index 1 -> M_k -> 0
        require_class(k, 4, 2, tag);
        r.terms = {{dim_label("hjf1", k), +1, dims(k, "hjf1")},
                   {dim_label("jf1", k), -1, dims(k, "jf1")},
                   {dim_label("mk", k), +1, dims(k, "mk")}};
        return finish(std::move(r));
    }
    if (tag == "index1-0mod4") {
        // 0 -> S_{k+4} -> hermitian index 1 -> classical index 1 -> 0
        require_class(k, 4, 0, tag);
        r.terms = {{dim_label("sk", k + 4), +1, dims(k + 4, "sk")},
                   {dim_label("hjf1", k), -1, dims(k, "hjf1")},
                   {dim_label("jf1", k), +1, dims(k, "jf1")}};
        return finish(std::move(r));
    }
    if (tag == "index1-chain") {
        // hermitian index 1 = M_k + S_{k+2} + S_{k+4} (development isomorphism)
        require_class(k, 4, 0, tag);
        r.terms = {{dim_label("hjf1", k), +1, dims(k, "hjf1")},
                   {dim_label("mk", k), -1, dims(k, "mk")},
                   {dim_label("sk", k + 2), -1, dims(k + 2, "sk")},
                   {dim_label("sk", k + 4), -1, dims(k + 4, "sk")}};
        return finish(std::move(r));
    }
    if (tag == "restrict-iso-0mod4") {
        // hermitian index 1 = classical index 2 (restriction isomorphism)
        require_class(k, 4, 0, tag);
        r.terms = {{dim_label("hjf1", k), +1, dims(k, "hjf1")},
                   {dim_label("jf2", k), -1, dims(k, "jf2")}};
        return finish(std::move(r));
    }
    if (tag == "ker-2mod4") {
        // 0 -> S_{k+2} x S_{k+6} -> hermitian index 2 -> classical index 2 -> M_k -> 0
        require_class(k, 4, 2, tag);
        r.terms = {{dim_label("sk", k + 2), +1, dims(k + 2, "sk")},
                   {dim_label("sk", k + 6), +1, dims(k + 6, "sk")},
                   {dim_label("hjf2", k), -1, dims(k, "hjf2")},
                   {dim_label("jf2", k), +1, dims(k, "jf2")},
                   {dim_label("mk", k), -1, dims(k, "mk")}};
        return finish(std::move(r));
    }
    if (tag == "pair-0mod4") {
        // 0 -> hermitian index 2 -> J_{k,2} x J_{k,4} -> M_k x S_{k+2} -> 0
        require_class(k, 4, 0, tag);
        r.terms = {{dim_label("hjf2", k), +1, dims(k, "hjf2")},
                   {dim_label("jf2", k), -1, dims(k, "jf2")},
                   {dim_label("jf4", k), -1, dims(k, "jf4")},
                   {dim_label("mk", k), +1, dims(k, "mk")},
                   {dim_label("sk", k + 2), +1, dims(k + 2, "sk")}};
        return finish(std::move(r));
    }
    if (tag == "index4-chain") {
        // S_{k+4} + S_{k+6} + S_{k+8} = hermitian index 1 (= k/4), k ≡ 0 (mod 4)
        require_class(k, 4, 0, tag);
        r.terms = {{dim_label("sk", k + 4), +1, dims(k + 4, "sk")},
                   {dim_label("sk", k + 6), +1, dims(k + 6, "sk")},
                   {dim_label("sk", k + 8), +1, dims(k + 8, "sk")},
                   {dim_label("hjf1", k), -1, dims(k, "hjf1")}};
        return finish(std::move(r));
    }
    if (tag == "odd-3mod4" || tag == "odd-1mod4") {
        // Quoted-data consistency for the odd classes: the tabulated dimension
        // against its closed form.  No independent odd-weight classical Jacobi
        // dimension formula is in scope, so this is a self-consistency line,
        // not an exact-sequence derivation.
        int residue = (tag == "odd-3mod4") ? 3 : 1;
        require_class(k, 4, residue, tag);
        long long closed = (residue == 3) ? (k - 3) / 4 : std::max(0, (k - 5) / 4);
        r.terms = {{dim_label("hjf2", k), +1, dims(k, "hjf2")},
                   {"closed-form(" + std::to_string(k) + ")", -1, closed}};
        return finish(std::move(r));
    }
    if (tag == "minweights") {
        // k/2 = 2(dim M_{k-4} + dim M_{k-8} + dim M_{k-12}), k ≡ 0 (mod 4)
        require_class(k, 4, 0, tag);
        r.terms = {{dim_label("hjf2", k), +1, dims(k, "hjf2")},
                   {dim_label("mk", k - 4), -2, dim_mk(k - 4)},
                   {dim_label("mk", k - 8), -2, dim_mk(k - 8)},
                   {dim_label("mk", k - 12), -2, dim_mk(k - 12)}};
        return finish(std::move(r));
    }
    throw std::invalid_argument("sequence_audit: unknown tag '" + tag + "'");
}

}  // namespace hjf
