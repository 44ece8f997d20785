#include "hjf/hermitian.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace hjf {

namespace {

std::string point_text(const HalfPoint& r) {
    return "(" + std::to_string(r.x) + (r.y < 0 ? "" : "+") + std::to_string(r.y) + "i)/2";
}

QSeries normalize_leading(const QSeries& f) {
    if (f.is_zero()) return f;
    return f.scaled(GaussRat(1) / f.terms().begin()->second);
}

}  // namespace

HermitianExpansion::HermitianExpansion(int weight, long long index, long long den,
                                       std::map<HKey, GaussRat> coef, Rat prec)
    : weight_(weight), index_(index), den_(den), coef_(std::move(coef)), prec_(std::move(prec)) {
    if (index_ < 1) throw std::invalid_argument("HermitianExpansion: index must be >= 1");
    if (den_ < 1) throw std::invalid_argument("HermitianExpansion: den must be >= 1");
    normalize();
}

void HermitianExpansion::normalize() {
    for (auto it = coef_.begin(); it != coef_.end();) {
        if (it->second.is_zero() || !(rat(it->first.n, den_) < prec_))
            it = coef_.erase(it);
        else
            ++it;
    }
    if (coef_.empty()) {
        den_ = 1;
        return;
    }
    long long g = den_;
    for (const auto& [key, c] : coef_) {
        g = std::gcd(g, std::llabs(key.n));
        if (g == 1) return;
    }
    if (g > 1) {
        std::map<HKey, GaussRat> reduced;
        for (auto& [key, c] : coef_)
            reduced.emplace_hint(reduced.end(), HKey{key.n / g, key.r}, std::move(c));
        coef_ = std::move(reduced);
        den_ /= g;
    }
}

HermitianExpansion HermitianExpansion::with_den(long long d) const {
    if (d % den_ != 0) throw std::invalid_argument("with_den: not a multiple of current den");
    long long f = d / den_;
    if (f == 1) return *this;
    std::map<HKey, GaussRat> rekeyed;
    for (const auto& [key, c] : coef_)
        rekeyed.emplace_hint(rekeyed.end(), HKey{key.n * f, key.r}, c);
    // Assign fields directly: the normalizing constructor would immediately
    // gcd-reduce the denominator again, defeating the whole point of moving
    // both operands of an addition onto one common grid.
    HermitianExpansion out = *this;
    out.den_ = d;
    out.coef_ = std::move(rekeyed);
    return out;
}

GaussRat HermitianExpansion::coeff(const Rat& n, const HalfPoint& r) const {
    if (!(n < prec_))
        throw std::out_of_range("HermitianExpansion::coeff: exponent " + rat_to_string(n) +
                                " is beyond precision " + rat_to_string(prec_));
    Rat scaled_exp = n * rat(den_);
    if (scaled_exp.get_den() != 1) return GaussRat(0);
    if (!scaled_exp.get_num().fits_slong_p()) return GaussRat(0);
    auto it = coef_.find(HKey{scaled_exp.get_num().get_si(), r});
    return it == coef_.end() ? GaussRat(0) : it->second;
}

HermitianExpansion HermitianExpansion::operator-() const {
    std::map<HKey, GaussRat> out;
    for (const auto& [key, c] : coef_) out.emplace_hint(out.end(), key, -c);
    return HermitianExpansion(weight_, index_, den_, std::move(out), prec_);
}

HermitianExpansion HermitianExpansion::operator+(const HermitianExpansion& o) const {
    if (index_ != o.index_)
        throw std::invalid_argument("HermitianExpansion: cannot add expansions of different index");
    long long d = std::lcm(den_, o.den_);
    HermitianExpansion a = with_den(d), b = o.with_den(d);
    std::map<HKey, GaussRat> out = std::move(a.coef_);
    for (const auto& [key, c] : b.coef_) {
        auto [it, inserted] = out.try_emplace(key, c);
        if (!inserted) it->second += c;
    }
    return HermitianExpansion(weight_, index_, d, std::move(out), std::min(prec_, o.prec_));
}

HermitianExpansion HermitianExpansion::operator-(const HermitianExpansion& o) const {
    return *this + (-o);
}

HermitianExpansion HermitianExpansion::scaled(const GaussRat& c) const {
    if (c.is_zero()) return HermitianExpansion(weight_, index_, 1, {}, prec_);
    std::map<HKey, GaussRat> out;
    for (const auto& [key, v] : coef_) out.emplace_hint(out.end(), key, v * c);
    return HermitianExpansion(weight_, index_, den_, std::move(out), prec_);
}

HermitianExpansion HermitianExpansion::with_weight(int k) const {
    HermitianExpansion out = *this;
    out.weight_ = k;
    return out;
}

std::optional<HermMismatch> hermitian_first_mismatch(const HermitianExpansion& a,
                                                     const HermitianExpansion& b) {
    if (a.index() != b.index())
        throw std::invalid_argument("hermitian_first_mismatch: expansions have different index");
    Rat p = std::min(a.prec(), b.prec());
    HermitianExpansion diff = HermitianExpansion(a.weight_, a.index_, a.den_, a.coef_, p) - b;
    if (diff.is_zero()) return std::nullopt;
    const auto& [key, c] = *diff.terms().begin();
    Rat e = rat(key.n, diff.den());
    return HermMismatch{e, key.r, a.coeff(e, key.r), b.coeff(e, key.r)};
}

HermitianExpansion theta_hermitian(long long m, const Rep& s, const Rat& prec) {
    if (m < 1) throw std::invalid_argument("theta_hermitian: index m must be >= 1");
    const long long d = 4 * m, step = 2 * m;
    const long long a = mod_pos(s.a, step), b = mod_pos(s.b, step);
    std::map<HKey, GaussRat> coef;
    auto scan_row = [&](long long x) {
        for (long long y = b; rat(x * x + y * y, d) < prec; y += step)
            coef.emplace(HKey{x * x + y * y, HalfPoint(x, y)}, GaussRat(1));
        for (long long y = b - step; rat(x * x + y * y, d) < prec; y -= step)
            coef.emplace(HKey{x * x + y * y, HalfPoint(x, y)}, GaussRat(1));
    };
    for (long long x = a; rat(x * x, d) < prec; x += step) scan_row(x);
    for (long long x = a - step; rat(x * x, d) < prec; x -= step) scan_row(x);
    return HermitianExpansion(1, m, d, std::move(coef), prec);
}

namespace {

// Shared enumeration core of the two assemble overloads and the resynthesis
// check inside extract.  The grid validation must be skippable there: a bare
// theta series is a legitimate extraction target but its components sit off
// the integral grid of genuine forms.
HermitianExpansion assemble_impl(const ComponentVector& cv, const std::optional<Rat>& fill_prec,
                                 bool validate_grid) {
    const long long m = cv.index;
    if (m < 1) throw std::invalid_argument("assemble: index must be >= 1");
    const std::vector<Rep> classes = representatives(m);

    std::map<Rep, QSeries> comps;
    for (const auto& [s, h] : cv.comps) {
        Rep canon(static_cast<int>(mod_pos(s.a, 2 * m)), static_cast<int>(mod_pos(s.b, 2 * m)));
        if (!comps.emplace(canon, h).second)
            throw std::invalid_argument("assemble: duplicate component for class " +
                                        rep_to_string(canon));
    }
    for (const Rep& s : classes) {
        if (comps.count(s)) continue;
        if (!fill_prec)
            throw std::invalid_argument("assemble: missing component for class " +
                                        rep_to_string(s));
        comps.emplace(s, QSeries::zero(*fill_prec));
    }

    // Form precision: the tightest exponent any component determines, shifted
    // by the minimal lattice norm of its class.
    bool first = true;
    Rat prec;
    long long den = 4 * m;
    for (const Rep& s : classes) {
        const QSeries& h = comps.at(s);
        Rat cand = h.prec() + rat(min_norm4_in_class(s, m), 4 * m);
        if (first || cand < prec) prec = cand;
        first = false;
        den = std::lcm(den, h.den());
    }

    const long long theta_scale = den / (4 * m);
    std::map<HKey, GaussRat> coef;
    for (const Rep& s : classes) {
        const QSeries& h = comps.at(s);
        const long long fs = den / h.den();
        const long long min4 = min_norm4_in_class(s, m);
        const long long step = 2 * m;
        for (const auto& [e_num, c] : h.terms()) {
            if (e_num < 0)
                throw std::domain_error(
                    "assemble: support violation: component " + rep_to_string(s) +
                    " has exponent " + rat_to_string(rat(e_num, h.den())) + " < 0");
            if (validate_grid && mod_pos(e_num * fs + theta_scale * min4, den) != 0)
                throw std::domain_error(
                    "assemble: component " + rep_to_string(s) + " exponent " +
                    rat_to_string(rat(e_num, h.den())) +
                    " is off the integral exponent grid of its class");
            const long long base = e_num * fs;
            auto emit = [&](long long x, long long y) {
                long long n_num = base + theta_scale * (x * x + y * y);
                if (!(rat(n_num, den) < prec)) return false;
                auto [it, inserted] = coef.try_emplace(HKey{n_num, HalfPoint(x, y)}, c);
                if (!inserted) it->second += c;
                return true;
            };
            auto scan_row = [&](long long x) {
                for (long long y = s.b; emit(x, y); y += step) {}
                for (long long y = s.b - step; emit(x, y); y -= step) {}
            };
            for (long long x = s.a; rat(base + theta_scale * x * x, den) < prec; x += step)
                scan_row(x);
            for (long long x = s.a - step; rat(base + theta_scale * x * x, den) < prec; x -= step)
                scan_row(x);
        }
    }
    return HermitianExpansion(cv.weight, m, den, std::move(coef), prec);
}

}  // namespace

HermitianExpansion assemble(const ComponentVector& cv, const Rat& zero_comp_prec) {
    return assemble_impl(cv, zero_comp_prec, true);
}

HermitianExpansion assemble(const ComponentVector& cv) {
    return assemble_impl(cv, std::nullopt, true);
}

HermitianExpansion assemble_unchecked(const ComponentVector& cv) {
    return assemble_impl(cv, std::nullopt, false);
}

ComponentVector extract(const HermitianExpansion& phi) {
    const long long m = phi.index();
    const long long den = std::lcm(phi.den(), 4 * m);
    const long long f_phi = den / phi.den();
    const long long theta_scale = den / (4 * m);

    std::map<Rep, std::map<long long, GaussRat>> raw;
    for (const auto& [key, c] : phi.terms()) {
        long long e_num = key.n * f_phi - theta_scale * key.r.norm4();
        if (e_num < 0)
            throw decomposition_error("extract: support violation at q^" +
                                      rat_to_string(rat(key.n, phi.den())) + ", r = " +
                                      point_text(key.r));
        // The smallest-norm representative of each class is met first (terms
        // are sorted by n); later representatives must agree, which the
        // resynthesis check below enforces.
        raw[reduce(key.r, m)].try_emplace(e_num, c);
    }

    ComponentVector cv;
    cv.weight = phi.weight();
    cv.index = m;
    for (const Rep& s : representatives(m)) {
        Rat comp_prec = phi.prec() - rat(min_norm4_in_class(s, m), 4 * m);
        auto it = raw.find(s);
        cv.comps.emplace(s, QSeries(den,
                                    it == raw.end() ? std::map<long long, GaussRat>{}
                                                    : std::move(it->second),
                                    std::move(comp_prec)));
    }

    HermitianExpansion resynth = assemble_impl(cv, std::nullopt, false);
    if (auto mm = hermitian_first_mismatch(phi, resynth))
        throw decomposition_error(
            "extract: coefficients do not factor through the class decomposition; first "
            "mismatch at q^" + rat_to_string(mm->exponent) + ", r = " + point_text(mm->r));
    return cv;
}

bool check_support_hermitian(const HermitianExpansion& phi) {
    for (const auto& [key, c] : phi.terms())
        if (4 * phi.index() * key.n < phi.den() * key.r.norm4()) return false;
    return true;
}

SymmetryReport check_symmetries(const HermitianExpansion& phi) {
    SymmetryReport report;
    report.char_label = static_cast<int>(mod_pos(-phi.weight(), 4));
    const long long m = phi.index();
    const int k = phi.weight();
    ComponentVector cv = extract(phi);

    for (const Rep& s : representatives(m)) {
        for (long e = 1; e <= 3; ++e) {
            Rep target = unit_index(e, s, m);
            QSeries expected = cv.comps.at(s).scaled(unit_power(-e * k));
            if (!equal_upto(cv.comps.at(target), expected))
                report.violations.push_back("h(" + rep_to_string(target) + ") != i^" +
                                            std::to_string(mod_pos(-e * k, 4)) + " * h(" +
                                            rep_to_string(s) + ")");
        }
    }

    if (m == 2 && k % 2 == 0) {
        auto H = [&](int a, int b) -> const QSeries& { return cv.comps.at(Rep(a, b)); };
        auto fam = [&](std::string name, bool ok) {
            report.families.emplace_back(std::move(name), ok);
        };
        if (mod_pos(k, 4) == 0) {
            fam("h01=h03=h10=h30", equal_upto(H(0, 1), H(0, 3)) &&
                                       equal_upto(H(0, 1), H(1, 0)) &&
                                       equal_upto(H(0, 1), H(3, 0)));
            fam("h02=h20", equal_upto(H(0, 2), H(2, 0)));
            fam("h12=h21=h23=h32", equal_upto(H(1, 2), H(2, 1)) &&
                                       equal_upto(H(1, 2), H(2, 3)) &&
                                       equal_upto(H(1, 2), H(3, 2)));
            fam("h11=h13=h31=h33", equal_upto(H(1, 1), H(1, 3)) &&
                                       equal_upto(H(1, 1), H(3, 1)) &&
                                       equal_upto(H(1, 1), H(3, 3)));
        } else {
            fam("h00=0", H(0, 0).is_zero());
            fam("h22=0", H(2, 2).is_zero());
            fam("h03=h01", equal_upto(H(0, 3), H(0, 1)));
            fam("h30=-h01", equal_upto(H(3, 0), -H(0, 1)));
            fam("h10=-h01", equal_upto(H(1, 0), -H(0, 1)));
            fam("h20=-h02", equal_upto(H(2, 0), -H(0, 2)));
            fam("h33=h11", equal_upto(H(3, 3), H(1, 1)));
            fam("h31=-h11", equal_upto(H(3, 1), -H(1, 1)));
            fam("h13=-h11", equal_upto(H(1, 3), -H(1, 1)));
            fam("h32=h12", equal_upto(H(3, 2), H(1, 2)));
            fam("h21=-h12", equal_upto(H(2, 1), -H(1, 2)));
            fam("h23=-h12", equal_upto(H(2, 3), -H(1, 2)));
        }
    }

    report.pass = report.violations.empty() &&
                  std::all_of(report.families.begin(), report.families.end(),
                              [](const auto& f) { return f.second; });
    return report;
}

JacobiExpansion restrict_to(const HermitianExpansion& phi, long long ra, long long rb) {
    if (ra == 0 && rb == 0) throw std::invalid_argument("restrict_to: rho must be nonzero");
    std::map<JacobiExpansion::Key, GaussRat> coef;
    for (const auto& [key, c] : phi.terms()) {
        long long zeta_exp = key.r.x * ra - key.r.y * rb;  // 2 Re(r * rho)
        auto [it, inserted] = coef.try_emplace({key.n, zeta_exp}, c);
        if (!inserted) it->second += c;
    }
    return JacobiExpansion(phi.weight(), phi.index() * (ra * ra + rb * rb), phi.den(),
                           std::move(coef), phi.prec());
}

HermitianExpansion u_raise(const HermitianExpansion& phi) {
    std::map<HKey, GaussRat> coef;
    for (const auto& [key, c] : phi.terms())
        coef.emplace(HKey{key.n, HalfPoint(key.r.x - key.r.y, key.r.x + key.r.y)}, c);
    return HermitianExpansion(phi.weight(), 2 * phi.index(), phi.den(), std::move(coef),
                              phi.prec());
}

QSeries taylor_chi(const HermitianExpansion& phi, unsigned a, unsigned b) {
    mpz_class fact_a, fact_b;
    mpz_fac_ui(fact_a.get_mpz_t(), a);
    mpz_fac_ui(fact_b.get_mpz_t(), b);
    const GaussRat inv_fact(Rat(mpz_class(1), fact_a * fact_b));
    std::map<long long, GaussRat> out;
    for (const auto& [key, c] : phi.terms()) {
        GaussRat r(rat(key.r.x, 2), rat(key.r.y, 2));
        GaussRat w = pow(r, a) * pow(r.conj(), b);
        if (w.is_zero()) continue;
        add_mul(out[key.n], c, w * inv_fact);
    }
    return QSeries(phi.den(), std::move(out), phi.prec());
}

QSeries d06(const HermitianExpansion& phi) {
    std::map<long long, GaussRat> out;
    for (const auto& [key, c] : phi.terms()) {
        GaussRat w = pow(GaussRat(rat(key.r.x), rat(key.r.y)), 6);  // (2r)^6
        if (w.is_zero()) continue;
        add_mul(out[key.n], c, w);
    }
    return QSeries(phi.den(), std::move(out), phi.prec());
}

QSeries xi11(const HermitianExpansion& phi) {
    const int k = phi.weight();
    if (k < 1) throw std::domain_error("xi11: weight must be >= 1");
    return taylor_chi(phi, 1, 1) - taylor_chi(phi, 0, 0).derived().scaled(GaussRat(rat(1, k)));
}

QSeries xi22(const HermitianExpansion& phi) {
    const int k = phi.weight();
    if (k < 1) throw std::domain_error("xi22: weight must be >= 1");
    QSeries chi22 = taylor_chi(phi, 2, 2);
    QSeries d_chi11 = taylor_chi(phi, 1, 1).derived();
    QSeries dd_chi00 = taylor_chi(phi, 0, 0).derived().derived();
    return chi22 - d_chi11.scaled(GaussRat(rat(1, k + 2))) +
           dd_chi00.scaled(GaussRat(rat(1, 2 * (k + 1) * (k + 2))));
}

HermitianExpansion unit_relabel(const HermitianExpansion& phi, long e) {
    const long quarter_turns = mod_pos(-e, 4);
    std::map<HKey, GaussRat> coef;
    for (const auto& [key, c] : phi.terms()) {
        HalfPoint r = key.r;
        for (long j = 0; j < quarter_turns; ++j) r = r.times_i();
        coef.emplace(HKey{key.n, r}, c);
    }
    return HermitianExpansion(phi.weight(), phi.index(), phi.den(), std::move(coef),
                              phi.prec());
}

HermitianExpansion char_project(const HermitianExpansion& phi, int alpha) {
    HermitianExpansion acc = phi;
    for (long e = 1; e <= 3; ++e)
        acc = acc + unit_relabel(phi, e).scaled(unit_power(-static_cast<long>(alpha) * e));
    return acc.scaled(GaussRat(rat(1, 4)));
}

HermitianExpansion mul_hjf(const HermitianExpansion& a, const HermitianExpansion& b) {
    const int k = a.weight() + b.weight();
    const long long m = a.index() + b.index();
    const long long den = std::lcm(a.den(), b.den());
    const long long fa = den / a.den(), fb = den / b.den();
    const Rat va = a.is_zero() ? a.prec() : rat(a.terms().begin()->first.n, a.den());
    const Rat vb = b.is_zero() ? b.prec() : rat(b.terms().begin()->first.n, b.den());
    const Rat prec = std::min(a.prec() + vb, b.prec() + va);
    if (a.is_zero() || b.is_zero()) return HermitianExpansion::zero(k, m, prec);

    struct Row {
        std::vector<std::pair<HalfPoint, GaussRat>> pts;
        long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    };
    auto build_rows = [](const HermitianExpansion& e) {
        std::map<long long, Row> rows;
        for (const auto& [key, c] : e.terms()) {
            Row& row = rows[key.n];
            if (row.pts.empty()) {
                row.xmin = row.xmax = key.r.x;
                row.ymin = row.ymax = key.r.y;
            } else {
                row.xmin = std::min(row.xmin, key.r.x);
                row.xmax = std::max(row.xmax, key.r.x);
                row.ymin = std::min(row.ymin, key.r.y);
                row.ymax = std::max(row.ymax, key.r.y);
            }
            row.pts.emplace_back(key.r, c);
        }
        return rows;
    };
    const auto rows_a = build_rows(a);
    const auto rows_b = build_rows(b);

    // Convolve row pairs grouped by output exponent, accumulating each output
    // row on a dense grid to avoid per-term map lookups in the hot loop.
    std::map<long long, std::vector<std::pair<const Row*, const Row*>>> plan;
    for (const auto& [na, row_a] : rows_a) {
        for (const auto& [nb, row_b] : rows_b) {
            long long n_num = na * fa + nb * fb;
            if (!(rat(n_num, den) < prec)) break;
            plan[n_num].emplace_back(&row_a, &row_b);
        }
    }

    std::map<HKey, GaussRat> coef;
    for (const auto& [n_num, pairs] : plan) {
        long long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
        bool first = true;
        for (const auto& [pa, pb] : pairs) {
            long long cx0 = pa->xmin + pb->xmin, cx1 = pa->xmax + pb->xmax;
            long long cy0 = pa->ymin + pb->ymin, cy1 = pa->ymax + pb->ymax;
            if (first) {
                x0 = cx0, x1 = cx1, y0 = cy0, y1 = cy1;
                first = false;
            } else {
                x0 = std::min(x0, cx0), x1 = std::max(x1, cx1);
                y0 = std::min(y0, cy0), y1 = std::max(y1, cy1);
            }
        }
        const size_t width = static_cast<size_t>(y1 - y0 + 1);
        std::vector<GaussRat> grid(static_cast<size_t>(x1 - x0 + 1) * width);
        for (const auto& [pa, pb] : pairs)
            for (const auto& [ra, ca] : pa->pts)
                for (const auto& [rb, cb] : pb->pts)
                    add_mul(grid[static_cast<size_t>(ra.x + rb.x - x0) * width +
                                 static_cast<size_t>(ra.y + rb.y - y0)],
                            ca, cb);
        for (long long x = x0; x <= x1; ++x)
            for (long long y = y0; y <= y1; ++y) {
                GaussRat& cell =
                    grid[static_cast<size_t>(x - x0) * width + static_cast<size_t>(y - y0)];
                if (!cell.is_zero())
                    coef.emplace_hint(coef.end(), HKey{n_num, HalfPoint(x, y)},
                                      std::move(cell));
            }
    }
    return HermitianExpansion(k, m, den, std::move(coef), prec);
}

HermitianExpansion scalar_mul(const QSeries& f, const HermitianExpansion& phi, int j) {
    const long long den = std::lcm(f.den(), phi.den());
    const long long ff = den / f.den(), fp = den / phi.den();
    const Rat vp = phi.is_zero() ? phi.prec() : rat(phi.terms().begin()->first.n, phi.den());
    const Rat prec = std::min(f.prec() + vp, phi.prec() + f.val_or_prec());
    std::map<HKey, GaussRat> coef;
    for (const auto& [ef, cf] : f.terms()) {
        const long long base = ef * ff;
        for (const auto& [key, c] : phi.terms()) {
            long long n_num = base + key.n * fp;
            if (!(rat(n_num, den) < prec)) break;
            add_mul(coef[HKey{n_num, key.r}], cf, c);
        }
    }
    return HermitianExpansion(phi.weight() + j, phi.index(), den, std::move(coef), prec);
}

HermitianExpansion build_index1_2mod4(int k, const QSeries& f) {
    if (mod_pos(k, 4) != 2)
        throw unsupported_range("build_index1_2mod4: weight must be 2 mod 4, got " +
                                std::to_string(k));
    const Rat pf = f.prec();
    ThetaConstants tc = theta_constants(pf);
    QSeries xi = tc.theta1 * tc.theta0.derived() - tc.theta0 * tc.theta1.derived();
    QSeries h01 = divide(normalize_leading(f), xi);
    ComponentVector cv;
    cv.weight = k;
    cv.index = 1;
    cv.comps.emplace(Rep(0, 0), QSeries::zero(pf));
    cv.comps.emplace(Rep(0, 1), h01);
    cv.comps.emplace(Rep(1, 0), -h01);
    cv.comps.emplace(Rep(1, 1), QSeries::zero(pf));
    return assemble(cv);
}

HermitianExpansion build_ker_pi1_2mod4(int k, const QSeries& f, const QSeries& g) {
    if (mod_pos(k, 4) != 2)
        throw unsupported_range("build_ker_pi1_2mod4: weight must be 2 mod 4, got " +
                                std::to_string(k));
    const Rat pf = f.prec();
    ThetaConstants tc = theta_constants(pf);
    QSeries xi = tc.theta1 * tc.theta0.derived() - tc.theta0 * tc.theta1.derived();
    QSeries psi = divide(normalize_leading(f), eta_power(15, pf));
    QSeries h01 = psi * tc.a[2];
    QSeries h02 = (psi * tc.a[1]).scaled(GaussRat(-2));
    QSeries h12 = psi * tc.a[0];
    QSeries h11 = divide(normalize_leading(g), xi);
    ComponentVector cv;
    cv.weight = k;
    cv.index = 2;
    cv.comps.emplace(Rep(0, 0), QSeries::zero(pf));
    cv.comps.emplace(Rep(0, 1), h01);
    cv.comps.emplace(Rep(0, 2), h02);
    cv.comps.emplace(Rep(0, 3), h01);
    cv.comps.emplace(Rep(1, 0), -h01);
    cv.comps.emplace(Rep(1, 1), h11);
    cv.comps.emplace(Rep(1, 2), h12);
    cv.comps.emplace(Rep(1, 3), -h11);
    cv.comps.emplace(Rep(2, 0), -h02);
    cv.comps.emplace(Rep(2, 1), -h12);
    cv.comps.emplace(Rep(2, 2), QSeries::zero(pf));
    cv.comps.emplace(Rep(2, 3), -h12);
    cv.comps.emplace(Rep(3, 0), -h01);
    cv.comps.emplace(Rep(3, 1), -h11);
    cv.comps.emplace(Rep(3, 2), h12);
    cv.comps.emplace(Rep(3, 3), h11);
    return assemble(cv);
}

HermitianExpansion build_named(const std::string& name, const Rat& prec) {
    if (name == "phi42") return u_raise(build_named("phi41", prec));
    ThetaConstants tc = theta_constants(prec);
    if (name == "phi41") {
        QSeries x6 = tc.x.powed(6), y6 = tc.y.powed(6), z6 = tc.z.powed(6);
        ComponentVector cv;
        cv.weight = 4;
        cv.index = 1;
        cv.comps.emplace(Rep(0, 0), x6 + y6);
        cv.comps.emplace(Rep(0, 1), z6);
        cv.comps.emplace(Rep(1, 0), z6);
        cv.comps.emplace(Rep(1, 1), x6 - y6);
        return assemble(cv);
    }
    if (name == "phi42tilde") {
        QSeries x3 = tc.x.powed(3), y3 = tc.y.powed(3), z3 = tc.z.powed(3);
        QSeries h00 = (x3 * y3).scaled(GaussRat(2));
        QSeries h01 = z3 * (x3 - y3);
        QSeries h12 = z3 * (x3 + y3);
        ComponentVector cv;
        cv.weight = 4;
        cv.index = 2;
        cv.comps.emplace(Rep(0, 0), h00);
        cv.comps.emplace(Rep(0, 1), h01);
        cv.comps.emplace(Rep(0, 3), h01);
        cv.comps.emplace(Rep(1, 0), h01);
        cv.comps.emplace(Rep(1, 2), h12);
        cv.comps.emplace(Rep(2, 1), h12);
        cv.comps.emplace(Rep(2, 2), -h00);
        cv.comps.emplace(Rep(2, 3), h12);
        cv.comps.emplace(Rep(3, 0), h01);
        cv.comps.emplace(Rep(3, 2), h12);
        return assemble(cv, prec);
    }
    throw std::invalid_argument("build_named: unknown form '" + name +
                                "' (expected phi41, phi42, phi42tilde)");
}

std::optional<int> order_vanishing(const HermitianExpansion& phi) {
    if (phi.is_zero()) return std::nullopt;
    const int cap = static_cast<int>(2 * phi.index()) + 4;
    for (int total = 0; total <= cap; ++total)
        for (int a = 0; a <= total; ++a)
            if (!taylor_chi(phi, static_cast<unsigned>(a),
                            static_cast<unsigned>(total - a)).is_zero())
                return total;
    throw std::domain_error(
        "order_vanishing: nonzero expansion with no development coefficient up to order " +
        std::to_string(cap));
}

}  // namespace hjf
