// hjf-lab: command-line laboratory for exact q-expansions of Hermitian
// Jacobi forms over Z[i] and their classical restrictions.
//
// Forms travel as single JSON documents on standard streams, so commands
// compose with pipes:
//
//   hjf-lab form build phi41 | hjf-lab op chi --alpha 0 --beta 0
//
// Exit codes:
//   0  success / all verifications passed
//   1  a verification suite failed (report still emitted)
//   2  usage error or malformed input (JSON diagnostics on stderr)
//   3  structurally valid request outside a formula's validity range

#include "hjf/errors.hpp"
#include "hjf/hermitian.hpp"
#include "hjf/jacobi.hpp"
#include "hjf/lattice.hpp"
#include "hjf/modular.hpp"
#include "hjf/qseries.hpp"
#include "hjf/serialize.hpp"
#include "hjf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using namespace hjf;

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct AnyForm {
    FormKind kind = FormKind::qseries;
    std::optional<QSeries> q;
    std::optional<JacobiExpansion> jac;
    std::optional<HermitianExpansion> herm;
};

AnyForm form_from_json(const nlohmann::json& j) {
    AnyForm f;
    f.kind = detect_kind(j);
    switch (f.kind) {
        case FormKind::qseries: f.q = qseries_from_json(j); break;
        case FormKind::jacobi: f.jac = jacobi_from_json(j); break;
        case FormKind::hjf: f.herm = hjf_from_json(j); break;
    }
    return f;
}

AnyForm read_stdin_form() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return form_from_json(parse_json_text(ss.str()));
}

nlohmann::json form_to_json(const AnyForm& f) {
    switch (f.kind) {
        case FormKind::qseries: return to_json(*f.q);
        case FormKind::jacobi: return to_json(*f.jac);
        case FormKind::hjf: return to_json(*f.herm);
    }
    throw std::logic_error("form_to_json: bad kind");
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

int emit_verify_reports(const std::vector<SuiteReport>& reports, const std::string& format) {
    bool all = true;
    for (const auto& r : reports) all = all && r.pass;
    if (format == "text") {
        for (const auto& r : reports) std::cout << suite_report_text(r);
        if (reports.size() > 1)
            std::cout << (all ? "all suites passed" : "suite failures present") << "\n";
    } else if (reports.size() == 1) {
        emit(to_json(reports.front()));
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        emit(nlohmann::json{{"pass", all}, {"reports", arr}});
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hermitian Jacobi form laboratory"};
    app.require_subcommand(1);

    std::string prec_str, config_path, data_dir, format;
    app.add_option("--prec", prec_str, "q-exponent precision bound (rational, >= 8)");
    app.add_option("--config", config_path, "configuration file (JSON)");
    app.add_option("--data", data_dir, "external data directory for gated suites");
    app.add_option("--format", format, "verification report format: json or text");

    // theta
    auto* theta = app.add_subcommand("theta", "emit a theta series");
    theta->require_subcommand(1);
    theta->fallthrough();
    long long th_m = 1, th_mu = 0;
    std::string th_s;
    auto* theta_c = theta->add_subcommand("classical", "classical index-m theta at class mu");
    theta_c->fallthrough();
    theta_c->add_option("--m", th_m, "index")->required();
    theta_c->add_option("--mu", th_mu, "class mod 2m")->required();
    auto* theta_h = theta->add_subcommand("hermitian", "lattice theta at class (a,b)");
    theta_h->fallthrough();
    theta_h->add_option("--m", th_m, "index")->required();
    theta_h->add_option("--s", th_s, "class as a,b with a,b in [0,2m)")->required();

    // form
    auto* form = app.add_subcommand("form", "construct or combine forms");
    form->require_subcommand(1);
    form->fallthrough();
    std::string build_name;
    auto* form_build = form->add_subcommand("build", "named constructions");
    form_build->fallthrough();
    form_build->add_option("name", build_name, "phi41 | phi42 | phi42tilde")->required();

    int fc_k = 0, fc_f = 0;
    auto* form_fc = form->add_subcommand("from-cusp",
                                         "index-1 lift of a cusp-space basis vector (k = 2 mod 4)");
    form_fc->fallthrough();
    form_fc->add_option("--k", fc_k, "weight")->required();
    form_fc->add_option("--f", fc_f, "basis index into S_{k+2}")->required();

    int ker_k = 0, ker_f = -1, ker_g = -1;
    auto* form_ker = form->add_subcommand("ker",
                                          "index-2 kernel lift from cusp seeds (k = 2 mod 4)");
    form_ker->fallthrough();
    form_ker->add_option("--k", ker_k, "weight")->required();
    form_ker->add_option("--f", ker_f, "basis index into S_{k+6}, or -1 for none");
    form_ker->add_option("--g", ker_g, "basis index into S_{k+2}, or -1 for none");

    std::string mul_with;
    int mul_j = 0;
    auto* form_mul = form->add_subcommand("mul", "multiply the stdin form by a form from a file");
    form_mul->fallthrough();
    form_mul->add_option("--with", mul_with, "path of the second operand")->required();
    form_mul->add_option("--j", mul_j, "weight carried by a plain q-series operand");

    std::string sc_re = "1", sc_im = "0";
    auto* form_scale = form->add_subcommand("scale", "scale the stdin form by a constant");
    form_scale->fallthrough();
    form_scale->add_option("--re", sc_re, "rational real part");
    form_scale->add_option("--im", sc_im, "rational imaginary part");

    // restrict
    std::string rho;
    auto* restrict_cmd = app.add_subcommand("restrict", "restrict the stdin form along rho");
    restrict_cmd->fallthrough();
    restrict_cmd->add_option("--rho", rho, "1 or 1+i")->required();

    // op
    auto* op = app.add_subcommand("op", "development operators on the stdin form");
    op->require_subcommand(1);
    op->fallthrough();
    auto* op_d0 = op->add_subcommand("d0", "zeta = 1 specialization");
    op_d0->fallthrough();
    auto* op_d2 = op->add_subcommand("d2", "heat-corrected second development coefficient");
    op_d2->fallthrough();
    int chi_a = 0, chi_b = 0;
    auto* op_chi = op->add_subcommand("chi", "normalized Taylor coefficient chi(alpha,beta)");
    op_chi->fallthrough();
    op_chi->add_option("--alpha", chi_a, "first order")->required();
    op_chi->add_option("--beta", chi_b, "second order")->required();
    auto* op_d06 = op->add_subcommand("d06", "sixth moment (2r)^6 sum");
    op_d06->fallthrough();
    auto* op_vanish = op->add_subcommand("vanish", "order of vanishing at the origin");
    op_vanish->fallthrough();

    // dims
    int dims_k = 0;
    std::string dims_space;
    auto* dims_cmd = app.add_subcommand("dims", "print a dimension by tag");
    dims_cmd->fallthrough();
    dims_cmd->add_option("--k", dims_k, "weight")->required();
    dims_cmd->add_option("--space", dims_space, "mk|sk|jf1..jf4|hjf1|hjf2")->required();

    // verify
    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite, or all");
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();

    // export / import
    std::string file_path;
    auto* export_cmd = app.add_subcommand("export", "write the stdin form to a file");
    export_cmd->fallthrough();
    export_cmd->add_option("file", file_path, "output path")->required();
    auto* import_cmd = app.add_subcommand("import", "read a form file and emit it on stdout");
    import_cmd->fallthrough();
    import_cmd->add_option("file", file_path, "input path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Config cfg = load_config(config_path);
        if (!prec_str.empty()) cfg.precision = rat_from_string(prec_str);
        if (!data_dir.empty()) cfg.data_dir = data_dir;
        if (!format.empty()) cfg.format = format;
        if (cfg.precision < rat(8))
            throw usage_error("precision must be at least 8, got " +
                              rat_to_string(cfg.precision));
        if (cfg.format != "json" && cfg.format != "text")
            throw usage_error("unknown format '" + cfg.format + "' (expected json or text)");
        const Rat prec = cfg.precision;

        if (theta_c->parsed()) {
            emit(to_json(theta_classical(th_m, th_mu, prec)));
            return 0;
        }
        if (theta_h->parsed()) {
            emit(to_json(theta_hermitian(th_m, rep_from_string(th_s), prec)));
            return 0;
        }
        if (form_build->parsed()) {
            emit(to_json(build_named(build_name, prec)));
            return 0;
        }
        if (form_fc->parsed()) {
            const SpaceBasis sb = basis_sk(fc_k + 2, prec);
            emit(to_json(build_index1_2mod4(fc_k, sb.elems.at(static_cast<size_t>(fc_f)))));
            return 0;
        }
        if (form_ker->parsed()) {
            const QSeries f = ker_f >= 0
                                  ? basis_sk(ker_k + 6, prec).elems.at(static_cast<size_t>(ker_f))
                                  : QSeries::zero(prec);
            const QSeries g = ker_g >= 0
                                  ? basis_sk(ker_k + 2, prec).elems.at(static_cast<size_t>(ker_g))
                                  : QSeries::zero(prec);
            emit(to_json(build_ker_pi1_2mod4(ker_k, f, g)));
            return 0;
        }
        if (form_mul->parsed()) {
            const AnyForm a = read_stdin_form();
            const AnyForm b = form_from_json(parse_json_file(mul_with));
            if (a.kind == FormKind::hjf && b.kind == FormKind::hjf)
                emit(to_json(mul_hjf(*a.herm, *b.herm)));
            else if (a.kind == FormKind::hjf && b.kind == FormKind::qseries)
                emit(to_json(scalar_mul(*b.q, *a.herm, mul_j)));
            else if (a.kind == FormKind::qseries && b.kind == FormKind::hjf)
                emit(to_json(scalar_mul(*a.q, *b.herm, mul_j)));
            else if (a.kind == FormKind::jacobi && b.kind == FormKind::qseries)
                emit(to_json(a.jac->scalar_mul(*b.q, mul_j)));
            else if (a.kind == FormKind::qseries && b.kind == FormKind::jacobi)
                emit(to_json(b.jac->scalar_mul(*a.q, mul_j)));
            else if (a.kind == FormKind::qseries && b.kind == FormKind::qseries)
                emit(to_json(*a.q * *b.q));
            else
                throw usage_error("mul: unsupported operand kinds");
            return 0;
        }
        if (form_scale->parsed()) {
            const GaussRat c(rat_from_string(sc_re), rat_from_string(sc_im));
            const AnyForm a = read_stdin_form();
            switch (a.kind) {
                case FormKind::qseries: emit(to_json(a.q->scaled(c))); break;
                case FormKind::jacobi: emit(to_json(a.jac->scaled(c))); break;
                case FormKind::hjf: emit(to_json(a.herm->scaled(c))); break;
            }
            return 0;
        }
        if (restrict_cmd->parsed()) {
            if (rho != "1" && rho != "1+i")
                throw usage_error("restrict: --rho must be 1 or 1+i");
            const AnyForm a = read_stdin_form();
            if (a.kind != FormKind::hjf)
                throw usage_error("restrict expects a Hermitian expansion on stdin");
            emit(to_json(restrict_to(*a.herm, 1, rho == "1" ? 0 : 1)));
            return 0;
        }
        if (op_d0->parsed()) {
            const AnyForm a = read_stdin_form();
            if (a.kind == FormKind::jacobi)
                emit(to_json(specialize_z0(*a.jac)));
            else if (a.kind == FormKind::hjf)
                emit(to_json(taylor_chi(*a.herm, 0, 0)));
            else
                throw usage_error("d0 expects a Jacobi or Hermitian expansion on stdin");
            return 0;
        }
        if (op_d2->parsed()) {
            const AnyForm a = read_stdin_form();
            if (a.kind != FormKind::jacobi)
                throw usage_error("d2 expects a classical Jacobi expansion on stdin");
            emit(to_json(dev2(*a.jac)));
            return 0;
        }
        if (op_chi->parsed()) {
            if (chi_a < 0 || chi_b < 0) throw usage_error("chi: orders must be non-negative");
            const AnyForm a = read_stdin_form();
            if (a.kind != FormKind::hjf)
                throw usage_error("chi expects a Hermitian expansion on stdin");
            emit(to_json(taylor_chi(*a.herm, static_cast<unsigned>(chi_a),
                                    static_cast<unsigned>(chi_b))));
            return 0;
        }
        if (op_d06->parsed()) {
            const AnyForm a = read_stdin_form();
            if (a.kind != FormKind::hjf)
                throw usage_error("d06 expects a Hermitian expansion on stdin");
            emit(to_json(d06(*a.herm)));
            return 0;
        }
        if (op_vanish->parsed()) {
            const AnyForm a = read_stdin_form();
            if (a.kind != FormKind::hjf)
                throw usage_error("vanish expects a Hermitian expansion on stdin");
            const std::optional<int> v = order_vanishing(*a.herm);
            nlohmann::json j;
            if (v)
                j["order"] = *v;
            else
                j["order"] = nullptr;
            emit(j);
            return 0;
        }
        if (dims_cmd->parsed()) {
            std::cout << dims(dims_k, dims_space) << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (suite == "all")
                return emit_verify_reports(run_all_suites(prec), cfg.format);
            return emit_verify_reports({run_suite(suite, prec, cfg.data_dir)}, cfg.format);
        }
        if (export_cmd->parsed()) {
            const AnyForm a = read_stdin_form();
            std::ofstream out(file_path);
            if (!out) throw usage_error("export: cannot open '" + file_path + "' for writing");
            out << form_to_json(a).dump() << "\n";
            return 0;
        }
        if (import_cmd->parsed()) {
            emit(form_to_json(form_from_json(parse_json_file(file_path))));
            return 0;
        }
        throw usage_error("no command selected");
    } catch (const unsupported_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
