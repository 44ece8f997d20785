// JSON (de)serialization and configuration loading; schemas in serialize.hpp.

#include "hjf/serialize.hpp"

#include "hjf/lattice.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

namespace hjf {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw format_error(msg); }

const json& field(const json& j, const char* name) {
    if (!j.is_object())
        fail("expected a JSON object while looking for field '" + std::string(name) + "'");
    auto it = j.find(name);
    if (it == j.end()) fail("missing field '" + std::string(name) + "'");
    return *it;
}

long long get_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) fail("field '" + what + "': expected an integer");
    return v.get<long long>();
}

Rat get_rat(const json& v, const std::string& what) {
    try {
        if (v.is_number_integer()) return rat(v.get<long long>());
        if (v.is_string()) return rat_from_string(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail("field '" + what + "': " + e.what());
    }
    fail("field '" + what + "': expected an integer or a rational string");
}

GaussRat get_gauss(const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 2)
        fail("field '" + what + "': expected a two-element [re, im] array");
    return GaussRat(get_rat(v[0], what + "[0]"), get_rat(v[1], what + "[1]"));
}

json gauss_json(const GaussRat& c) {
    return json::array({rat_to_string(c.re), rat_to_string(c.im)});
}

long long positive_int_field(const json& j, const char* name) {
    long long v = get_int(field(j, name), name);
    if (v < 1) fail("field '" + std::string(name) + "': must be positive");
    return v;
}

}  // namespace

json to_json(const QSeries& f) {
    json terms = json::array();
    for (const auto& [n, c] : f.terms()) terms.push_back(json::array({n, gauss_json(c)}));
    return json{{"den", f.den()}, {"prec", rat_to_string(f.prec())}, {"terms", std::move(terms)}};
}

QSeries qseries_from_json(const json& j) {
    long long den = positive_int_field(j, "den");
    Rat prec = get_rat(field(j, "prec"), "prec");
    const json& terms = field(j, "terms");
    if (!terms.is_array()) fail("field 'terms': expected an array");
    std::map<long long, GaussRat> coef;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2)
            fail("field 'terms': each entry must be [n, [re, im]]");
        long long n = get_int(t[0], "terms[..][0]");
        if (!coef.emplace(n, get_gauss(t[1], "terms[..][1]")).second)
            fail("field 'terms': duplicate exponent " + std::to_string(n));
    }
    return QSeries(den, std::move(coef), std::move(prec));
}

json to_json(const JacobiExpansion& f) {
    json terms = json::array();
    for (const auto& [key, c] : f.terms())
        terms.push_back(json::array({key.first, key.second, gauss_json(c)}));
    return json{{"kind", "jacobi"},
                {"weight", f.weight()},
                {"index", f.index()},
                {"den", f.den()},
                {"prec", rat_to_string(f.prec())},
                {"terms", std::move(terms)}};
}

JacobiExpansion jacobi_from_json(const json& j) {
    if (detect_kind(j) != FormKind::jacobi) fail("field 'kind': expected \"jacobi\"");
    int k = static_cast<int>(get_int(field(j, "weight"), "weight"));
    long long m = positive_int_field(j, "index");
    long long den = positive_int_field(j, "den");
    Rat prec = get_rat(field(j, "prec"), "prec");
    const json& terms = field(j, "terms");
    if (!terms.is_array()) fail("field 'terms': expected an array");
    std::map<JacobiExpansion::Key, GaussRat> coef;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3)
            fail("field 'terms': each entry must be [n, r, [re, im]]");
        long long n = get_int(t[0], "terms[..][0]");
        long long r = get_int(t[1], "terms[..][1]");
        if (!coef.emplace(JacobiExpansion::Key{n, r}, get_gauss(t[2], "terms[..][2]")).second)
            fail("field 'terms': duplicate key [" + std::to_string(n) + ", " +
                 std::to_string(r) + "]");
    }
    return JacobiExpansion(k, m, den, std::move(coef), std::move(prec));
}

json to_json(const HermitianExpansion& f) {
    ComponentVector cv = extract(f);
    const long long m = f.index();
    long long den = 4 * m;
    for (const auto& [s, h] : cv.comps) den = std::lcm(den, h.den());
    json comps = json::object();
    for (const auto& [s, h] : cv.comps) {
        const long long scale = den / h.den();
        json entries = json::array();
        for (const auto& [e, c] : h.terms())
            entries.push_back(json::array({e * scale, gauss_json(c)}));
        comps[rep_to_string(s)] = std::move(entries);
    }
    return json{{"kind", "hjf"},
                {"weight", f.weight()},
                {"index", f.index()},
                {"den", den},
                {"prec", rat_to_string(f.prec())},
                {"components", std::move(comps)}};
}

HermitianExpansion hjf_from_json(const json& j) {
    if (detect_kind(j) != FormKind::hjf) fail("field 'kind': expected \"hjf\"");
    ComponentVector cv;
    cv.weight = static_cast<int>(get_int(field(j, "weight"), "weight"));
    cv.index = positive_int_field(j, "index");
    long long den = positive_int_field(j, "den");
    Rat prec = get_rat(field(j, "prec"), "prec");
    const json& comps = field(j, "components");
    if (!comps.is_object()) fail("field 'components': expected an object");

    auto comp_prec = [&](const Rep& s) {
        return Rat(prec - rat(min_norm4_in_class(s, cv.index), 4 * cv.index));
    };

    for (auto it = comps.begin(); it != comps.end(); ++it) {
        Rep s;
        try {
            Rep parsed = rep_from_string(it.key());
            s = Rep(static_cast<int>(mod_pos(parsed.a, 2 * cv.index)),
                    static_cast<int>(mod_pos(parsed.b, 2 * cv.index)));
        } catch (const std::invalid_argument& e) {
            fail("field 'components': bad class key '" + it.key() + "': " + e.what());
        }
        const json& entries = *it;
        if (!entries.is_array())
            fail("field 'components." + it.key() + "': expected an array");
        std::map<long long, GaussRat> coef;
        for (const auto& t : entries) {
            if (!t.is_array() || t.size() != 2)
                fail("field 'components." + it.key() + "': each entry must be [L, [re, im]]");
            long long e = get_int(t[0], "components." + it.key() + "[..][0]");
            if (!coef.emplace(e, get_gauss(t[1], "components." + it.key() + "[..][1]")).second)
                fail("field 'components." + it.key() + "': duplicate exponent " +
                     std::to_string(e));
        }
        if (!cv.comps.emplace(s, QSeries(den, std::move(coef), comp_prec(s))).second)
            fail("field 'components': duplicate class '" + it.key() + "'");
    }
    for (const Rep& s : representatives(cv.index))
        if (!cv.comps.count(s)) cv.comps.emplace(s, QSeries::zero(comp_prec(s)));

    try {
        return assemble_unchecked(cv);
    } catch (const std::exception& e) {
        fail(std::string("components do not assemble: ") + e.what());
    }
}

FormKind detect_kind(const json& j) {
    if (!j.is_object()) fail("expected a JSON object");
    auto it = j.find("kind");
    if (it == j.end()) return FormKind::qseries;
    if (!it->is_string()) fail("field 'kind': expected a string");
    std::string k = it->get<std::string>();
    if (k == "jacobi") return FormKind::jacobi;
    if (k == "hjf") return FormKind::hjf;
    fail("field 'kind': unknown value '" + k + "'");
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(e.what());  // the parser message carries line/column diagnostics
    }
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        fail("file '" + path + "': " + e.what());
    }
}

namespace {

json load_external(const std::string& path, FormKind expected, const char* expected_name) {
    json j = parse_json_file(path);
    auto it = j.is_object() ? j.find("source") : j.end();
    if (it == j.end() || !it->is_string() || it->get<std::string>().empty())
        fail("external data file '" + path + "': required field 'source' missing or empty");
    if (detect_kind(j) != expected)
        fail("external data file '" + path + "': expected kind \"" +
             std::string(expected_name) + "\"");
    return j;
}

}  // namespace

HermitianExpansion load_external_hjf(const std::string& path) {
    return hjf_from_json(load_external(path, FormKind::hjf, "hjf"));
}

JacobiExpansion load_external_jacobi(const std::string& path) {
    return jacobi_from_json(load_external(path, FormKind::jacobi, "jacobi"));
}

Config config_from_json(const json& j, Config base) {
    if (!j.is_object()) fail("config: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "precision") {
            base.precision = get_rat(*it, "precision");
        } else if (key == "data_dir") {
            if (!it->is_string()) fail("field 'data_dir': expected a string");
            base.data_dir = it->get<std::string>();
        } else if (key == "format") {
            if (!it->is_string()) fail("field 'format': expected a string");
            base.format = it->get<std::string>();
        } else {
            fail("config: unknown field '" + key + "'");
        }
    }
    if (base.precision < 8) fail("config: precision must be at least 8");
    if (base.format != "json" && base.format != "text")
        fail("config: format must be \"json\" or \"text\"");
    return base;
}

Config load_config(const std::string& config_path) {
    Config cfg;
    if (!config_path.empty()) cfg = config_from_json(parse_json_file(config_path), cfg);
    if (const char* env = std::getenv(kDataDirEnvVar); env && *env) cfg.data_dir = env;
    return cfg;
}

}  // namespace hjf
