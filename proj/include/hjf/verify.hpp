// Verification suites: named batteries of exact series identities covering
// the restriction maps, theta tables, development operators, determinant and
// eta-power identities, and the dimension bookkeeping.  Every check is exact
// rational arithmetic at a finite q-precision; a failing check reports the
// first mismatching coefficient, never just a summary.
//
// Reports are deterministic: the same suite at the same precision produces a
// byte-identical JSON rendering (no timing or environment data).

#pragma once

#include "hjf/hermitian.hpp"
#include "hjf/modular.hpp"
#include "hjf/qseries.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hjf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // on failure: first mismatch location and values
};

struct SuiteReport {
    std::string suite;
    Rat precision;
    bool skipped = false;
    std::string skip_reason;
    std::vector<CheckResult> checks;
    std::vector<AuditReport> audits;
    bool pass = false;  // all checks and audits pass; true when skipped
};

// All suite names, in canonical order.  Gated suites (which need external
// data) are listed last; suite_is_gated tells them apart.
const std::vector<std::string>& suite_catalog();
bool suite_is_gated(const std::string& name);

// Run one suite at the given precision.  data_dir points at external
// generator files for gated suites; when empty or incomplete those suites
// report skipped = true (and pass).  Unknown names throw invalid_argument.
SuiteReport run_suite(const std::string& name, const Rat& prec,
                      const std::string& data_dir = "");

// Run every non-gated suite in catalog order.
std::vector<SuiteReport> run_all_suites(const Rat& prec);

nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const SuiteReport& r);

// Compact human-readable rendering, one line per check/audit.
std::string suite_report_text(const SuiteReport& r);

// Square of an index-1 expansion computed through its theta components
// (class-pair convolution with theta-constant factors).  Equal to
// mul_hjf(phi, phi) but much faster for dense expansions.
HermitianExpansion square_index1(const HermitianExpansion& phi);

}  // namespace hjf
