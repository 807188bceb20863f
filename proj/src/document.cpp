#include "ramfilt/document.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace ramfilt {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where, const std::set<std::string>& allowed) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    for (const auto& [key, _] : j.items()) {
        if (!allowed.contains(key)) throw ValidationError(where + ": unknown key '" + key + "'");
    }
}

std::int64_t get_int(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw ValidationError(where + ": missing '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ValidationError(where + "." + key + ": expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        throw ValidationError(where + "." + key + ": out of range");
    }
    return v.get<std::int64_t>();
}

const json& get_array(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw ValidationError(where + ": missing '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_array()) throw ValidationError(where + "." + key + ": expected an array");
    return v;
}

FieldProfile parse_field(const json& j) {
    const std::string where = "field";
    require_object(j, where, {"p", "characteristic", "e", "zeta_p_in_K"});
    const auto p = get_int(j, "p", where);
    const auto ch = get_int(j, "characteristic", where);
    if (ch != 0 && ch != p) throw ValidationError("field.characteristic must be 0 or p");
    if (ch == p) return FieldProfile::equal(p);
    const auto e = get_int(j, "e", where);
    bool zeta = false;
    if (j.contains("zeta_p_in_K")) {
        if (!j.at("zeta_p_in_K").is_boolean()) throw ValidationError("field.zeta_p_in_K: expected a boolean");
        zeta = j.at("zeta_p_in_K").get<bool>();
    }
    return FieldProfile::mixed(p, e, zeta);
}

RamificationProfile parse_ramification(const json& j) {
    const std::string where = "ramification";
    require_object(j, where, {"p", "breaks"});
    const auto p = get_int(j, "p", where);
    std::vector<UpperBreak> breaks;
    const auto& arr = get_array(j, "breaks", where);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = where + ".breaks[" + std::to_string(i) + "]";
        require_object(arr[i], w, {"t", "f"});
        breaks.push_back({get_int(arr[i], "t", w), get_int(arr[i], "f", w)});
    }
    return RamificationProfile(p, std::move(breaks));
}

LowerSection parse_lower(const json& j) {
    const std::string where = "lower";
    require_object(j, where, {"p", "breaks"});
    LowerSection out;
    out.p = get_int(j, "p", where);
    require_prime(out.p, "lower");
    const auto& arr = get_array(j, "breaks", where);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = where + ".breaks[" + std::to_string(i) + "]";
        require_object(arr[i], w, {"l", "f"});
        if (!arr[i].contains("l")) throw ValidationError(w + ": missing 'l'");
        out.breaks.push_back({integer_from_json(arr[i].at("l"), w + ".l"), get_int(arr[i], "f", w)});
    }
    return out;
}

GroupSection parse_group(const json& j) {
    const std::string where = "group";
    require_object(j, where, {"builtin", "cayley_file", "table", "p"});
    GroupSection g;
    int sources = 0;
    if (j.contains("builtin")) {
        if (!j.at("builtin").is_string()) throw ValidationError("group.builtin: expected a string");
        g.builtin = j.at("builtin").get<std::string>();
        ++sources;
    }
    if (j.contains("cayley_file")) {
        if (!j.at("cayley_file").is_string()) throw ValidationError("group.cayley_file: expected a string");
        g.cayley_file = j.at("cayley_file").get<std::string>();
        ++sources;
    }
    if (j.contains("table")) {
        std::vector<std::vector<std::size_t>> table;
        for (const auto& row : get_array(j, "table", where)) {
            if (!row.is_array()) throw ValidationError("group.table: rows must be arrays");
            std::vector<std::size_t> r;
            for (const auto& x : row) {
                if (!x.is_number_unsigned()) throw ValidationError("group.table: entries must be non-negative integers");
                r.push_back(x.get<std::size_t>());
            }
            table.push_back(std::move(r));
        }
        g.table = std::move(table);
        ++sources;
    }
    if (sources != 1) throw ValidationError("group: give exactly one of builtin, cayley_file, table");
    if (j.contains("p")) {
        g.p = get_int(j, "p", where);
        require_prime(*g.p, "group");
    }
    return g;
}

LaurentPoly parse_artin_schreier(const json& j) {
    const std::string where = "artin_schreier";
    require_object(j, where, {"p", "f"});
    const auto p = get_int(j, "p", where);
    if (!j.contains("f") || !j.at("f").is_string()) throw ValidationError("artin_schreier.f: expected a string");
    return parse_laurent(p, j.at("f").get<std::string>());
}

}  // namespace

json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

Integer integer_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        Integer z;
        const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(), ::isdigit) &&
                            s != "-";
        if (!digits || z.set_str(s, 10) != 0) throw ValidationError(where + ": not an integer: '" + s + "'");
        return z;
    }
    throw ValidationError(where + ": expected an integer");
}

ProfileDocument parse_document(const json& j) {
    require_object(j, "document", {"field", "ramification", "lower", "group", "artin_schreier"});
    ProfileDocument doc;
    if (j.contains("field")) doc.field = parse_field(j.at("field"));
    if (j.contains("ramification")) doc.ramification = parse_ramification(j.at("ramification"));
    if (j.contains("lower")) doc.lower = parse_lower(j.at("lower"));
    if (j.contains("group")) doc.group = parse_group(j.at("group"));
    if (j.contains("artin_schreier")) doc.artin_schreier = parse_artin_schreier(j.at("artin_schreier"));

    std::vector<std::pair<std::string, std::int64_t>> primes;
    if (doc.field) primes.emplace_back("field", doc.field->p());
    if (doc.ramification) primes.emplace_back("ramification", doc.ramification->p());
    if (doc.lower) primes.emplace_back("lower", doc.lower->p);
    if (doc.group && doc.group->p) primes.emplace_back("group", *doc.group->p);
    if (doc.artin_schreier) primes.emplace_back("artin_schreier", doc.artin_schreier->p());
    if (!doc.field && !doc.ramification && !doc.lower && !doc.group && !doc.artin_schreier) {
        throw ValidationError("document has no sections");
    }
    for (const auto& [name, p] : primes) {
        if (p != primes.front().second) {
            throw ValidationError("prime mismatch: " + primes.front().first + " has p = " +
                                  std::to_string(primes.front().second) + ", " + name + " has p = " +
                                  std::to_string(p));
        }
    }
    return doc;
}

ProfileDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return parse_document(j);
}

ProfileDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

json to_json(const ProfileDocument& doc) {
    json j = json::object();
    if (doc.field) {
        const auto& f = *doc.field;
        json fj = {{"p", f.p()}, {"characteristic", f.characteristic()}};
        if (!f.is_equal_characteristic()) {
            fj["e"] = *f.e();
            fj["zeta_p_in_K"] = f.zeta_p_in_K();
        }
        j["field"] = fj;
    }
    if (doc.ramification) {
        json breaks = json::array();
        for (const auto& b : doc.ramification->breaks()) breaks.push_back({{"t", b.t}, {"f", b.f}});
        j["ramification"] = {{"p", doc.ramification->p()}, {"breaks", breaks}};
    }
    if (doc.lower) {
        json breaks = json::array();
        for (const auto& b : doc.lower->breaks) breaks.push_back({{"l", integer_to_json(b.l)}, {"f", b.f}});
        j["lower"] = {{"p", doc.lower->p}, {"breaks", breaks}};
    }
    if (doc.group) {
        const auto& g = *doc.group;
        json gj = json::object();
        if (g.builtin) gj["builtin"] = *g.builtin;
        if (g.cayley_file) gj["cayley_file"] = *g.cayley_file;
        if (g.table) gj["table"] = *g.table;
        if (g.p) gj["p"] = *g.p;
        j["group"] = gj;
    }
    if (doc.artin_schreier) {
        j["artin_schreier"] = {{"p", doc.artin_schreier->p()}, {"f", to_string(*doc.artin_schreier)}};
    }
    return j;
}

FiniteGroup load_group(const GroupSection& section, const std::filesystem::path& base_dir) {
    if (section.builtin) return builtin_group(*section.builtin);
    if (section.table) return FiniteGroup(*section.table);
    const auto path = base_dir / *section.cayley_file;
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open Cayley table " + path.string());
    return parse_cayley_table(in);
}

}  // namespace ramfilt
