// Acceptance gate: twelve numbered criteria, one PASS/FAIL line each.
//
// Criteria 1-10 and 12 are decided by the named verification suites run at
// the default precision bound of 40; criterion 11 re-runs the structural
// invariant battery directly on a catalog of freshly constructed forms.
// Exit status 0 iff every criterion passes.

#include "hjf/hermitian.hpp"
#include "hjf/jacobi.hpp"
#include "hjf/lattice.hpp"
#include "hjf/modular.hpp"
#include "hjf/qseries.hpp"
#include "hjf/serialize.hpp"
#include "hjf/verify.hpp"
#include "oracles.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace hjf;

std::string failing_checks(const SuiteReport& r) {
    std::string out;
    for (const auto& c : r.checks)
        if (!c.pass) out += (out.empty() ? "" : "; ") + c.name;
    for (const auto& a : r.audits)
        if (!a.pass) out += (out.empty() ? "" : "; ") + ("audit " + a.audit);
    return out;
}

struct Gate {
    std::map<std::string, SuiteReport> by_suite;
    bool all_ungated_pass = true;

    bool suites(std::initializer_list<const char*> names, std::string* why) const {
        bool ok = true;
        for (const char* n : names) {
            const SuiteReport& r = by_suite.at(n);
            if (!r.pass) {
                ok = false;
                if (!why->empty()) *why += "; ";
                *why += std::string(n) + ": " + failing_checks(r);
            }
        }
        return ok;
    }
};

// The structural invariants every constructed expansion must satisfy:
// support bound, unit-law symmetries, character parity of the Taylor
// developments, and exactness of the component round trip.
bool invariant_battery(const Rat& prec, std::string* why) {
    const Rat seedp = prec + rat(6);
    std::vector<std::pair<std::string, HermitianExpansion>> forms;
    const HermitianExpansion phi41 = build_named("phi41", prec);
    forms.emplace_back("phi41", phi41);
    forms.emplace_back("phi42", build_named("phi42", prec));
    forms.emplace_back("phi42tilde", build_named("phi42tilde", prec));
    forms.emplace_back("phi41^2", square_index1(phi41));
    forms.emplace_back("u-raise of phi41", u_raise(phi41));
    forms.emplace_back("E4 * phi41", scalar_mul(eisenstein(4, prec), phi41, 4));
    forms.emplace_back("lift of weight-12 cusp form",
                       build_index1_2mod4(10, basis_sk(12, seedp).elems.at(0)));
    forms.emplace_back("lift of weight-16 cusp form",
                       build_index1_2mod4(14, basis_sk(16, seedp).elems.at(0)));
    forms.emplace_back("kernel lift, weight 6",
                       build_ker_pi1_2mod4(6, basis_sk(12, seedp).elems.at(0),
                                           QSeries::zero(seedp)));
    forms.emplace_back("kernel lift, weight 10",
                       build_ker_pi1_2mod4(10, basis_sk(16, seedp).elems.at(0),
                                           basis_sk(12, seedp).elems.at(0)));

    bool ok = true;
    auto flag = [&](const std::string& name, const char* what, bool pass) {
        if (pass) return;
        ok = false;
        if (!why->empty()) *why += "; ";
        *why += name + ": " + what;
    };
    for (const auto& [name, f] : forms) {
        flag(name, "support bound", check_support_hermitian(f));
        flag(name, "unit-law symmetries", check_symmetries(f).pass);
        bool parity = true;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                if (mod_pos(a - b - f.weight(), 4) != 0 &&
                    !taylor_chi(f, static_cast<unsigned>(a), static_cast<unsigned>(b)).is_zero())
                    parity = false;
        flag(name, "development parity", parity);
        bool round = false;
        try {
            round = !hermitian_first_mismatch(assemble(extract(f)), f).has_value();
        } catch (const std::exception&) {
            round = false;
        }
        flag(name, "component round trip", round);
    }
    return ok;
}

}  // namespace

int main() {
    const Rat prec = rat(40);

    Gate gate;
    for (SuiteReport& r : run_all_suites(prec)) {
        gate.all_ungated_pass = gate.all_ungated_pass && r.pass;
        const std::string key = r.suite;
        gate.by_suite.emplace(key, std::move(r));
    }

    struct Line {
        int id;
        bool pass;
        std::string label;
        std::string detail;
    };
    std::vector<Line> lines;
    auto add = [&](int id, const std::string& label, bool pass, std::string detail = "") {
        lines.push_back({id, pass, label, std::move(detail)});
    };

    std::string why;

    // Criterion 1 also cross-checks the index-1 lattice theta coefficients
    // against brute-force point counts, independently of the suite's own
    // construction path.
    bool counts_ok = true;
    for (const Rep& s : representatives(1)) {
        const QSeries c = taylor_chi(theta_hermitian(1, s, prec), 0, 0);
        for (long long n4 = 0;; ++n4) {
            const Rat e = rat(n4, 4);
            if (!(e < c.prec())) break;
            if (c.coeff(e) != GaussRat(rat(oracle::lattice_count(2, s.a, s.b, n4)), rat(0)))
                counts_ok = false;
        }
    }

    why.clear();
    if (!counts_ok) why = "lattice point counts disagree";
    add(1, "index-1 theta constants built from one-variable series",
        gate.suites({"theta-constants"}, &why) && counts_ok, why);

    why.clear();
    add(2, "restriction and index-raising tables for lattice thetas",
        gate.suites({"lemma-2to2", "lemma-2to4", "lemma-utheta"}, &why), why);

    why.clear();
    add(3, "index-1 lift pipeline at weights 10/14/18/22",
        gate.suites({"thm-index1-2mod4"}, &why), why);

    why.clear();
    add(4, "index-2 kernel pipeline at weights 6/10/14",
        gate.suites({"thm-2mod4-ind2"}, &why), why);

    why.clear();
    add(5, "joint restriction injectivity and lambda agreement",
        gate.suites({"thm-0mod4-ind2"}, &why), why);

    why.clear();
    add(6, "index raising of phi41 and the phi42tilde system",
        gate.suites({"prop-phi42"}, &why), why);

    why.clear();
    add(7, "wronskian and sixth-moment eta identities",
        gate.suites({"wronskian", "chi60"}, &why), why);

    why.clear();
    add(8, "vanishing-order bounds, with the weight-10 lift attaining its bound",
        gate.suites({"vanishing-order"}, &why), why);

    why.clear();
    add(9, "xi series identities and cusp-lift rank",
        gate.suites({"cor-xi-iso"}, &why), why);

    why.clear();
    add(10, "dimension, rank, and minimal-weight audits across the weight range",
        gate.suites({"dims-audit", "ranks-audit", "sect6-identity"}, &why), why);

    why.clear();
    {
        const bool ok = invariant_battery(prec, &why);
        add(11, "invariant battery on every constructed form", ok, why);
    }

    {
        const char* env = std::getenv(kDataDirEnvVar);
        const SuiteReport r = run_suite("sasaki-identities", prec, env ? env : "");
        bool ok = r.pass;
        std::string detail;
        if (r.skipped) {
            ok = ok && gate.all_ungated_pass;  // aggregate run must stay green
            detail = "SKIPPED: " + r.skip_reason;
        } else {
            detail = failing_checks(r);
        }
        add(12, "gated external-data suite", ok, detail);
    }

    bool all = true;
    int passed = 0;
    for (const auto& l : lines) {
        all = all && l.pass;
        passed += l.pass ? 1 : 0;
        std::cout << "criterion " << std::setw(2) << l.id << " " << (l.pass ? "PASS" : "FAIL")
                  << "  " << l.label;
        if (!l.detail.empty()) std::cout << " (" << l.detail << ")";
        std::cout << "\n";
    }
    std::cout << "acceptance: " << passed << "/" << lines.size()
              << " criteria passed at precision " << rat_to_string(prec) << "\n";
    return all ? 0 : 1;
}
