#include <doctest.h>

#include "hjf/hermitian.hpp"
#include "hjf/jacobi.hpp"
#include "hjf/modular.hpp"
#include "hjf/qseries.hpp"
#include "hjf/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

using namespace hjf;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "tmp_" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("q-series JSON round trip is exact and canonical") {
    const Rat P = rat(12);
    const QSeries f = eta_power(6, P).scaled(GaussRat(rat(1, 3), rat(-2)));
    const nlohmann::json j = to_json(f);
    CHECK(detect_kind(j) == FormKind::qseries);
    const QSeries back = qseries_from_json(j);
    CHECK(back == f);
    CHECK(to_json(back).dump() == j.dump());
    // zero series round-trips too
    CHECK(qseries_from_json(to_json(QSeries::zero(rat(9)))).is_zero());
}

TEST_CASE("Jacobi expansion JSON round trip") {
    const Rat P = rat(12);
    const JacobiExpansion f =
        theta_classical(2, 1, P).scalar_mul(eisenstein(4, P), 4).scaled(GaussRat(rat(1, 2), rat(5)));
    const nlohmann::json j = to_json(f);
    CHECK(detect_kind(j) == FormKind::jacobi);
    const JacobiExpansion back = jacobi_from_json(j);
    CHECK(back.weight() == 4);
    CHECK(back.index() == 2);
    CHECK(back.prec() == f.prec());
    CHECK(!jacobi_first_mismatch(back, f).has_value());
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("Hermitian expansion JSON round trip through components") {
    const Rat P = rat(10);
    const HermitianExpansion f = build_named("phi42tilde", P);
    const nlohmann::json j = to_json(f);
    CHECK(detect_kind(j) == FormKind::hjf);
    const HermitianExpansion back = hjf_from_json(j);
    CHECK(back.weight() == 4);
    CHECK(back.index() == 2);
    CHECK(!hermitian_first_mismatch(back, f).has_value());
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("malformed input yields located diagnostics") {
    CHECK_THROWS_AS(parse_json_text("{\"den\": 1,"), format_error);
    CHECK_THROWS_AS(parse_json_file("no_such_file.json"), format_error);
    // schema violations name the offending field
    CHECK_THROWS_AS(qseries_from_json(nlohmann::json{{"den", 1}}), format_error);
    CHECK_THROWS_AS(qseries_from_json(nlohmann::json::parse(
                        R"({"den": 0, "prec": "5", "terms": []})")),
                    format_error);
    CHECK_THROWS_AS(qseries_from_json(nlohmann::json::parse(
                        R"({"den": 1, "prec": "5", "terms": [[0, ["1/0", "0"]]]})")),
                    format_error);
    CHECK_THROWS_AS(detect_kind(nlohmann::json::parse(R"({"kind": "mystery"})")), format_error);
    CHECK_THROWS_AS(
        hjf_from_json(nlohmann::json::parse(
            R"({"kind": "hjf", "weight": 4, "index": 1, "den": 1, "prec": "9",
                "components": {"0,0": [[0, ["1", "0"]], [0, ["2", "0"]]]}})")),
        format_error);
    try {
        parse_json_text("{\n  \"den\": oops\n}");
        CHECK(false);
    } catch (const format_error& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("external data files require a provenance string") {
    const Rat P = rat(10);
    nlohmann::json j = to_json(build_named("phi41", P));
    const std::string bare = write_temp("external_bare.json", j.dump());
    CHECK_THROWS_AS(load_external_hjf(bare), format_error);
    j["source"] = "unit-test fixture";
    const std::string good = write_temp("external_good.json", j.dump());
    const HermitianExpansion f = load_external_hjf(good);
    CHECK(f.weight() == 4);
    CHECK_THROWS_AS(load_external_jacobi(good), format_error);  // kind mismatch

    nlohmann::json jj = to_json(theta_classical(1, 0, P));
    jj["source"] = "unit-test fixture";
    const std::string jac = write_temp("external_jac.json", jj.dump());
    CHECK(load_external_jacobi(jac).index() == 1);
}

TEST_CASE("configuration precedence") {
    const Config def;
    CHECK(def.precision == rat(40));
    CHECK(def.data_dir.empty());
    CHECK(def.format == "json");

    const Config fromFile = config_from_json(
        nlohmann::json::parse(R"({"precision": "25/2", "format": "text"})"));
    CHECK(fromFile.precision == rat(25, 2));
    CHECK(fromFile.format == "text");

    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"precision": "4"})")),
                    format_error);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"format": "xml"})")),
                    format_error);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"mystery": 1})")), format_error);

    // file value, then environment override for the data directory
    const std::string cfgPath =
        write_temp("config.json", R"({"precision": "14", "data_dir": "from-file"})");
    setenv(kDataDirEnvVar, "from-env", 1);
    const Config env = load_config(cfgPath);
    CHECK(env.precision == rat(14));
    CHECK(env.data_dir == "from-env");
    unsetenv(kDataDirEnvVar);
    const Config noEnv = load_config(cfgPath);
    CHECK(noEnv.data_dir == "from-file");
    const Config empty = load_config("");
    CHECK(empty.precision == rat(40));
}
