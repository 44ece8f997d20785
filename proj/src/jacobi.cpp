#include "hjf/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hjf {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// Centered class representative in (-m, m] for a residue mod 2m.
long long centered(long long v, long long m) {
    long long c = ((v % (2 * m)) + 2 * m) % (2 * m);
    return c > m ? c - 2 * m : c;
}

mpz_class factorial(unsigned v) {
    mpz_class f = 1;
    for (unsigned i = 2; i <= v; ++i) f *= i;
    return f;
}

}  // namespace

JacobiExpansion::JacobiExpansion(int weight, long long index, long long den,
                                 std::map<Key, GaussRat> coef, Rat prec)
    : weight_(weight), index_(index), den_(den), coef_(std::move(coef)), prec_(std::move(prec)) {
    if (index_ < 1) throw std::invalid_argument("JacobiExpansion: index must be >= 1");
    if (den_ < 1) throw std::invalid_argument("JacobiExpansion: den must be >= 1");
    normalize();
}

void JacobiExpansion::normalize() {
    for (auto it = coef_.begin(); it != coef_.end();) {
        if (it->second.is_zero() || !(rat(it->first.first, den_) < prec_))
            it = coef_.erase(it);
        else
            ++it;
    }
    long long g = den_;
    for (const auto& [k, c] : coef_) {
        long long n = k.first < 0 ? -k.first : k.first;
        g = std::gcd(g, n);
        if (g == 1) break;
    }
    if (coef_.empty()) {
        den_ = 1;
        return;
    }
    if (g > 1) {
        std::map<Key, GaussRat> rekeyed;
        for (auto& [k, c] : coef_) rekeyed.emplace(Key{k.first / g, k.second}, std::move(c));
        coef_ = std::move(rekeyed);
        den_ /= g;
    }
}

JacobiExpansion JacobiExpansion::with_den(long long d) const {
    if (d == den_) return *this;
    if (d % den_ != 0) throw std::logic_error("JacobiExpansion::with_den: not a multiple");
    long long f = d / den_;
    std::map<Key, GaussRat> m;
    for (const auto& [k, c] : coef_) m.emplace(Key{k.first * f, k.second}, c);
    JacobiExpansion out = *this;
    out.den_ = d;
    out.coef_ = std::move(m);
    return out;
}

GaussRat JacobiExpansion::coeff(const Rat& n, long long r) const {
    if (n >= prec_)
        throw std::out_of_range("JacobiExpansion::coeff: exponent beyond precision");
    Rat scaled = n * rat(den_);
    if (scaled.get_den() != 1) return GaussRat(0);
    auto it = coef_.find(Key{scaled.get_num().get_si(), r});
    return it == coef_.end() ? GaussRat(0) : it->second;
}

JacobiExpansion JacobiExpansion::operator-() const {
    JacobiExpansion out = *this;
    for (auto& [k, c] : out.coef_) c = -c;
    return out;
}

JacobiExpansion JacobiExpansion::operator+(const JacobiExpansion& o) const {
    if (index_ != o.index_)
        throw std::invalid_argument("JacobiExpansion: cannot add different indices");
    long long d = lcm_ll(den_, o.den_);
    JacobiExpansion a = with_den(d), b = o.with_den(d);
    std::map<Key, GaussRat> m = std::move(a.coef_);
    for (const auto& [k, c] : b.coef_) {
        auto [it, inserted] = m.try_emplace(k, c);
        if (!inserted) it->second += c;
    }
    return JacobiExpansion(weight_, index_, d, std::move(m), std::min(prec_, o.prec_));
}

JacobiExpansion JacobiExpansion::operator-(const JacobiExpansion& o) const {
    return *this + (-o);
}

JacobiExpansion JacobiExpansion::scaled(const GaussRat& c) const {
    JacobiExpansion out = *this;
    if (c.is_zero()) {
        out.coef_.clear();
        out.den_ = 1;
        return out;
    }
    for (auto& [k, v] : out.coef_) v *= c;
    return out;
}

JacobiExpansion JacobiExpansion::scalar_mul(const QSeries& f, int j) const {
    long long d = lcm_ll(den_, f.den());
    JacobiExpansion a = with_den(d);
    const long long fd = d / f.den();
    // Precision: the zeta-free factor behaves like a q-series multiplier.
    Rat vf = f.val_or_prec();
    Rat vp = coef_.empty() ? prec_ : rat(coef_.begin()->first.first, den_);
    Rat p = std::min(prec_ + vf, f.prec() + vp);
    std::map<Key, GaussRat> m;
    for (const auto& [kf, cf] : f.terms()) {
        for (const auto& [k, c] : a.coef_) {
            long long n = k.first + kf * fd;
            if (!(rat(n, d) < p)) break;
            auto [it, inserted] = m.try_emplace(Key{n, k.second});
            add_mul(it->second, cf, c);
        }
    }
    return JacobiExpansion(weight_ + j, index_, d, std::move(m), p);
}

JacobiExpansion JacobiExpansion::with_weight(int k) const {
    JacobiExpansion out = *this;
    out.weight_ = k;
    return out;
}

JacobiExpansion theta_classical(long long m, long long mu, const Rat& prec) {
    if (m < 1) throw std::invalid_argument("theta_classical: index must be >= 1");
    std::map<JacobiExpansion::Key, GaussRat> coef;
    const long long d = 4 * m;
    // r^2/4m < prec
    for (long long r = ((mu % (2 * m)) + 2 * m) % (2 * m);; r += 2 * m) {
        if (!(rat(r * r, d) < prec)) break;
        coef.emplace(JacobiExpansion::Key{r * r, r}, GaussRat(1));
    }
    for (long long r = ((mu % (2 * m)) + 2 * m) % (2 * m) - 2 * m;; r -= 2 * m) {
        if (!(rat(r * r, d) < prec)) break;
        coef.emplace(JacobiExpansion::Key{r * r, r}, GaussRat(1));
    }
    return JacobiExpansion(0, m, d, std::move(coef), prec);
}

ThetaConstants theta_constants(const Rat& prec) {
    ThetaConstants tc;
    auto lattice_sum = [&prec](long long den, auto exponent_key, auto coefficient,
                               long long start, long long step) {
        // One-dimensional theta constant: sum over j in start + step*Z.
        std::map<long long, GaussRat> m;
        for (long long j = start;; j += step) {
            long long key = exponent_key(j);
            if (!(rat(key, den) < prec)) break;
            auto [it, ins] = m.try_emplace(key, coefficient(j));
            if (!ins) it->second += coefficient(j);
        }
        for (long long j = start - step;; j -= step) {
            long long key = exponent_key(j);
            if (!(rat(key, den) < prec)) break;
            auto [it, ins] = m.try_emplace(key, coefficient(j));
            if (!ins) it->second += coefficient(j);
        }
        return QSeries(den, std::move(m), prec);
    };
    auto one = [](long long) { return GaussRat(1); };

    tc.a.reserve(4);
    for (long long mu = 0; mu < 4; ++mu)  // a_mu: r ≡ mu (4), exponent r^2/8
        tc.a.push_back(lattice_sum(8, [](long long r) { return r * r; }, one, mu, 4));
    tc.b.reserve(8);
    for (long long mu = 0; mu < 8; ++mu)  // b_mu: r ≡ mu (8), exponent r^2/16
        tc.b.push_back(lattice_sum(16, [](long long r) { return r * r; }, one, mu, 8));
    // Index-1 constants: r ≡ mu (2), exponent r^2/4.
    tc.theta0 = lattice_sum(4, [](long long r) { return r * r; }, one, 0, 2);
    tc.theta1 = lattice_sum(4, [](long long r) { return r * r; }, one, 1, 2);
    // x = sum q^(n^2/2), y with alternating signs, z over half-integers t
    // (t = j + 1/2 gives exponent (2j+1)^2/8).
    tc.x = lattice_sum(2, [](long long n) { return n * n; }, one, 0, 1);
    tc.y = lattice_sum(2, [](long long n) { return n * n; },
                       [](long long n) { return GaussRat((n % 2 == 0) ? 1 : -1); }, 0, 1);
    tc.z = lattice_sum(8, [](long long j) { return (2 * j + 1) * (2 * j + 1); }, one, 0, 1);
    return tc;
}

QSeries specialize_z0(const JacobiExpansion& phi) {
    std::map<long long, GaussRat> m;
    for (const auto& [k, c] : phi.terms()) {
        auto [it, inserted] = m.try_emplace(k.first, c);
        if (!inserted) it->second += c;
    }
    return QSeries(phi.den(), std::move(m), phi.prec());
}

QSeries taylor_psi(const JacobiExpansion& phi, unsigned v) {
    std::map<long long, GaussRat> m;
    for (const auto& [k, c] : phi.terms()) {
        mpz_class rv = 1;
        for (unsigned i = 0; i < v; ++i) rv *= static_cast<long>(k.second);
        GaussRat t = c * GaussRat(Rat(rv));
        auto [it, inserted] = m.try_emplace(k.first, t);
        if (!inserted) it->second += t;
    }
    QSeries out(phi.den(), std::move(m), phi.prec());
    return out.scaled(GaussRat(Rat(1) / Rat(factorial(v))));
}

QSeries dev2(const JacobiExpansion& phi) {
    QSeries psi2 = taylor_psi(phi, 2);
    QSeries psi0 = specialize_z0(phi);
    return psi2.scaled(GaussRat(2 * phi.weight())) -
           psi0.derived().scaled(GaussRat(2 * phi.index()));
}

QSeries lambda_op(const JacobiExpansion& phi) {
    return specialize_z0(phi) + dev2(phi).scaled(GaussRat(rat(2, phi.index())));
}

std::vector<QSeries> theta_decompose_classical(const JacobiExpansion& phi) {
    const long long m = phi.index();
    const long long d = phi.den();
    std::vector<std::map<long long, GaussRat>> comps(static_cast<size_t>(2 * m));
    std::vector<long long> comp_den(static_cast<size_t>(2 * m), 4 * m * d);
    // Reference pass: read each component off the centered representative.
    for (const auto& [k, c] : phi.terms()) {
        long long mu = ((k.second % (2 * m)) + 2 * m) % (2 * m);
        if (k.second != centered(k.second, m)) continue;
        // exponent e = n - r^2/4m on the common lattice den 4m*d
        long long e = 4 * m * k.first - d * k.second * k.second;
        if (e < 0)
            throw decomposition_error("theta_decompose: support violated at (n=" +
                                      rat_to_string(rat(k.first, d)) + ", r=" +
                                      std::to_string(k.second) + ")");
        comps[static_cast<size_t>(mu)].emplace(e, c);
    }
    std::vector<QSeries> out;
    out.reserve(static_cast<size_t>(2 * m));
    for (long long mu = 0; mu < 2 * m; ++mu) {
        long long chat = centered(mu, m);
        Rat comp_prec = phi.prec() - rat(chat * chat, 4 * m);
        out.emplace_back(comp_den[static_cast<size_t>(mu)],
                         std::move(comps[static_cast<size_t>(mu)]), comp_prec);
    }
    // Resynthesize and compare exactly: any deviation means the coefficient
    // of (n, r) did not depend only on (4mn - r^2, r mod 2m).
    JacobiExpansion rebuilt = theta_assemble_classical(phi.weight(), m, out);
    long long bad_r = 0;
    if (auto mis = jacobi_first_mismatch(phi, rebuilt, &bad_r)) {
        throw decomposition_error("theta_decompose: coefficient at (n=" +
                                  rat_to_string(mis->exponent) + ", r=" + std::to_string(bad_r) +
                                  ") breaks the (4mn - r^2, r mod 2m) dependence law");
    }
    return out;
}

JacobiExpansion theta_assemble_classical(int weight, long long m,
                                         const std::vector<QSeries>& comps) {
    if (comps.size() != static_cast<size_t>(2 * m))
        throw std::invalid_argument("theta_assemble: expected 2m components");
    // Form precision: limited per class by the centered representative.
    Rat prec = comps.empty() ? Rat(0) : comps[0].prec();
    for (long long mu = 0; mu < 2 * m; ++mu) {
        long long chat = centered(mu, m);
        prec = std::min(prec, Rat(comps[static_cast<size_t>(mu)].prec() + rat(chat * chat, 4 * m)));
    }
    long long d = 4 * m;
    for (const auto& h : comps) d = lcm_ll(d, h.den());
    std::map<JacobiExpansion::Key, GaussRat> coef;
    for (long long mu = 0; mu < 2 * m; ++mu) {
        const QSeries& h = comps[static_cast<size_t>(mu)];
        const long long f = d / h.den();
        const long long mu0 = ((mu % (2 * m)) + 2 * m) % (2 * m);
        for (const auto& [e, c] : h.terms()) {
            if (e < 0)
                throw std::domain_error("theta_assemble: component " + std::to_string(mu) +
                                        " has negative exponent " + rat_to_string(rat(e, h.den())) +
                                        " (support violation)");
            auto emit = [&](long long r) {
                long long n = e * f + (d / (4 * m)) * r * r;
                if (!(rat(n, d) < prec)) return false;
                auto [it, inserted] = coef.try_emplace(JacobiExpansion::Key{n, r}, c);
                if (!inserted) it->second += c;
                return true;
            };
            for (long long r = mu0; emit(r); r += 2 * m) {}
            for (long long r = mu0 - 2 * m; emit(r); r -= 2 * m) {}
        }
    }
    return JacobiExpansion(weight, m, d, std::move(coef), prec);
}

bool check_support(const JacobiExpansion& phi) {
    for (const auto& [k, c] : phi.terms())
        if (rat(4 * phi.index() * k.first, phi.den()) < rat(k.second * k.second)) return false;
    return true;
}

std::optional<Mismatch> jacobi_first_mismatch(const JacobiExpansion& a,
                                              const JacobiExpansion& b,
                                              long long* r_out) {
    if (a.index() != b.index())
        throw std::invalid_argument("jacobi_first_mismatch: different indices");
    Rat p = std::min(a.prec(), b.prec());
    JacobiExpansion diff = JacobiExpansion(a.weight(), a.index(), a.den(), a.coef_, p) - b;
    if (diff.is_zero()) return std::nullopt;
    const auto& [k, c] = *diff.terms().begin();
    Rat e = rat(k.first, diff.den());
    if (r_out) *r_out = k.second;
    GaussRat lhs = (e < a.prec()) ? a.coeff(e, k.second) : GaussRat(0);
    GaussRat rhs = (e < b.prec()) ? b.coeff(e, k.second) : GaussRat(0);
    return Mismatch{e, lhs, rhs};
}

}  // namespace hjf
