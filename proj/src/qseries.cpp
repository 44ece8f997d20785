#include "hjf/qseries.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hjf {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// Largest integer n with n/den < bound (i.e. strict exponent cutoff as a key).
// Returns the key bound B such that keys must satisfy key < B... we instead
// test each key exactly: key/den < bound  <=>  key * bound.den < bound.num * den.
bool key_below(long long key, long long den, const Rat& bound) {
    // key/den < bound
    return rat(key, den) < bound;
}

}  // namespace

QSeries::QSeries(long long den, std::map<long long, GaussRat> coef, Rat prec)
    : den_(den), coef_(std::move(coef)), prec_(std::move(prec)) {
    if (den_ < 1) throw std::invalid_argument("QSeries: den must be >= 1");
    normalize();
}

QSeries QSeries::monomial(const Rat& exponent, const GaussRat& c, const Rat& prec) {
    Rat e = exponent;
    e.canonicalize();
    long long d = e.get_den().get_si();
    long long n = e.get_num().get_si();
    std::map<long long, GaussRat> m;
    m.emplace(n, c);
    return QSeries(d, std::move(m), prec);
}

void QSeries::normalize() {
    for (auto it = coef_.begin(); it != coef_.end();) {
        if (it->second.is_zero() || !key_below(it->first, den_, prec_))
            it = coef_.erase(it);
        else
            ++it;
    }
    // Minimize the exponent denominator.
    long long g = den_;
    for (const auto& [k, c] : coef_) {
        g = std::gcd(g, k < 0 ? -k : k);
        if (g == 1) break;
    }
    if (coef_.empty()) {
        den_ = 1;
        return;
    }
    if (g > 1) {
        std::map<long long, GaussRat> rekeyed;
        for (auto& [k, c] : coef_) rekeyed.emplace(k / g, std::move(c));
        coef_ = std::move(rekeyed);
        den_ /= g;
    }
}

QSeries QSeries::with_den(long long d) const {
    if (d == den_) return *this;
    if (d % den_ != 0) throw std::logic_error("QSeries::with_den: not a multiple");
    long long f = d / den_;
    std::map<long long, GaussRat> m;
    for (const auto& [k, c] : coef_) m.emplace(k * f, c);
    QSeries out;
    out.den_ = d;
    out.coef_ = std::move(m);
    out.prec_ = prec_;
    return out;
}

std::optional<Rat> QSeries::valuation() const {
    if (coef_.empty()) return std::nullopt;
    return rat(coef_.begin()->first, den_);
}

Rat QSeries::val_or_prec() const {
    auto v = valuation();
    return v ? *v : prec_;
}

GaussRat QSeries::coeff(const Rat& e) const {
    if (e >= prec_)
        throw std::out_of_range("QSeries::coeff: exponent " + rat_to_string(e) +
                                " not determined (precision " + rat_to_string(prec_) + ")");
    Rat scaled = e * rat(den_);
    if (scaled.get_den() != 1) return GaussRat(0);
    long long key = scaled.get_num().get_si();
    auto it = coef_.find(key);
    return it == coef_.end() ? GaussRat(0) : it->second;
}

QSeries QSeries::operator-() const {
    QSeries out = *this;
    for (auto& [k, c] : out.coef_) c = -c;
    return out;
}

QSeries QSeries::operator+(const QSeries& o) const {
    long long d = lcm_ll(den_, o.den_);
    QSeries a = with_den(d), b = o.with_den(d);
    Rat p = std::min(prec_, o.prec_);
    std::map<long long, GaussRat> m = std::move(a.coef_);
    for (const auto& [k, c] : b.coef_) {
        auto [it, inserted] = m.try_emplace(k, c);
        if (!inserted) it->second += c;
    }
    return QSeries(d, std::move(m), p);
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    long long d = lcm_ll(den_, o.den_);
    QSeries a = with_den(d), b = o.with_den(d);
    Rat p = std::min(prec_ + o.val_or_prec(), o.prec_ + val_or_prec());
    std::map<long long, GaussRat> m;
    if (!a.coef_.empty() && !b.coef_.empty()) {
        for (const auto& [ka, ca] : a.coef_) {
            for (const auto& [kb, cb] : b.coef_) {
                if (!key_below(ka + kb, d, p)) break;  // b sorted ascending
                auto [it, inserted] = m.try_emplace(ka + kb);
                add_mul(it->second, ca, cb);
            }
        }
    }
    return QSeries(d, std::move(m), p);
}

QSeries QSeries::scaled(const GaussRat& c) const {
    QSeries out = *this;
    if (c.is_zero()) {
        out.coef_.clear();
        out.den_ = 1;
        return out;
    }
    for (auto& [k, v] : out.coef_) v *= c;
    return out;
}

QSeries QSeries::shifted(const Rat& e) const {
    Rat ec = e;
    ec.canonicalize();
    long long ed = ec.get_den().get_si();
    long long d = lcm_ll(den_, ed);
    QSeries a = with_den(d);
    long long off = (ec.get_num().get_si()) * (d / ed);
    std::map<long long, GaussRat> m;
    for (auto& [k, c] : a.coef_) m.emplace(k + off, std::move(c));
    return QSeries(d, std::move(m), prec_ + ec);
}

QSeries QSeries::truncated(const Rat& new_prec) const {
    QSeries out = *this;
    out.prec_ = std::min(prec_, new_prec);
    out.normalize();
    return out;
}

QSeries QSeries::derived() const {
    QSeries out = *this;
    for (auto& [k, c] : out.coef_) c *= GaussRat(rat(k, den_));
    out.normalize();  // the constant term drops out
    return out;
}

QSeries QSeries::powed(unsigned long e) const {
    if (e == 0) return one(prec_);
    QSeries acc = *this;
    // Binary powering; precision follows the multiplication contract.
    unsigned long msb = 1;
    while ((msb << 1) <= e) msb <<= 1;
    for (msb >>= 1; msb; msb >>= 1) {
        acc = acc * acc;
        if (e & msb) acc = acc * (*this);
    }
    return acc;
}

std::string QSeries::to_text(size_t max_terms) const {
    if (coef_.empty()) return "0 + O(q^" + rat_to_string(prec_) + ")";
    std::ostringstream os;
    size_t shown = 0;
    for (const auto& [k, c] : coef_) {
        if (shown == max_terms) {
            os << "+ ... ";
            break;
        }
        if (shown) os << "+ ";
        Rat e = rat(k, den_);
        os << "(" << gauss_to_string(c) << ")";
        if (sgn(e) != 0) os << "*q^(" << rat_to_string(e) << ")";
        os << " ";
        ++shown;
    }
    os << "+ O(q^" << rat_to_string(prec_) << ")";
    return os.str();
}

QSeries divide(const QSeries& a, const QSeries& b) {
    if (b.is_zero())
        throw std::domain_error("divide: divisor has no terms within its precision");
    Rat vb = *b.valuation();
    Rat va = a.val_or_prec();
    Rat p = std::min(Rat(a.prec() - vb), Rat(b.prec() + va - vb - vb));
    // Work on the common exponent lattice.
    long long d = lcm_ll(a.den(), b.den());
    QSeries rem = a.truncated(p + vb);
    const GaussRat lead_b = b.terms().begin()->second;
    std::map<long long, GaussRat> quot;
    while (!rem.is_zero()) {
        Rat er = *rem.valuation();
        Rat ec = er - vb;
        if (ec >= p) break;
        GaussRat cq = rem.terms().begin()->second / lead_b;
        Rat ec_scaled = ec * rat(d);
        if (ec_scaled.get_den() != 1)
            throw std::logic_error("divide: exponent left the common lattice");
        quot.emplace(ec_scaled.get_num().get_si(), cq);
        // Monomial precision p keeps rem's precision pinned at p + vb through
        // the subtraction, for divisors of any valuation sign.
        rem = rem - QSeries::monomial(ec, cq, p) * b;
    }
    return QSeries(d, std::move(quot), p);
}

QSeries eta_power(long n, const Rat& prec) {
    if (n < 1) throw std::invalid_argument("eta_power: exponent must be >= 1");
    // eta = q^(1/24) * sum_{j in Z} (-1)^j q^(j(3j-1)/2)  (Euler).
    std::map<long long, GaussRat> m;
    for (long long j = 0;; ++j) {
        long long e1 = j * (3 * j - 1) / 2;  // j >= 0 branch
        long long e2 = j * (3 * j + 1) / 2;  // -j branch
        bool any = false;
        GaussRat sign((j % 2 == 0) ? 1 : -1);
        if (rat(e1) < prec) {
            m.emplace(1 + 24 * e1, sign);
            any = true;
        }
        if (j > 0 && rat(e2) < prec) {
            m.emplace(1 + 24 * e2, sign);
            any = true;
        }
        if (!any && j > 0) break;
    }
    QSeries eta(24, std::move(m), prec + rat(1, 24));
    return eta.powed(static_cast<unsigned long>(n)).truncated(prec);
}

std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b) {
    Rat p = std::min(a.prec(), b.prec());
    QSeries diff = (a.truncated(p)) - (b.truncated(p));
    if (diff.is_zero()) return std::nullopt;
    Rat e = *diff.valuation();
    return Mismatch{e, a.coeff(e), b.coeff(e)};
}

}  // namespace hjf
