#include "ramfilt/commands.hpp"

#include "ramfilt/herbrand.hpp"

#include <iomanip>
#include <sstream>

namespace ramfilt {

using nlohmann::json;

namespace {

/// A report that cannot be produced because the input is invalid; carries the
/// violation list for the diagnostic stream.
struct Rejected {
    std::vector<std::string> violations;
};

[[noreturn]] void reject(std::vector<std::string> violations) { throw Rejected{std::move(violations)}; }
[[noreturn]] void reject(const std::string& violation) { throw Rejected{{violation}}; }

std::string join_ints(const std::vector<std::int64_t>& xs, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
    return out.str();
}

std::string render_upper(std::span<const UpperBreak> breaks) {
    if (breaks.empty()) return "(none)";
    std::ostringstream out;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        out << (i ? " " : "") << '(' << breaks[i].t << ", " << breaks[i].f << ')';
    }
    return out.str();
}

json upper_json(std::span<const UpperBreak> breaks) {
    json arr = json::array();
    for (const auto& b : breaks) arr.push_back({{"t", b.t}, {"f", b.f}});
    return arr;
}

std::optional<std::int64_t> document_prime(const ProfileDocument& doc) {
    if (doc.field) return doc.field->p();
    if (doc.ramification) return doc.ramification->p();
    if (doc.lower) return doc.lower->p;
    if (doc.artin_schreier) return doc.artin_schreier->p();
    if (doc.group && doc.group->p) return *doc.group->p;
    return std::nullopt;
}

int cmd_lower(const ProfileDocument& doc, const CommandOptions& opt, std::ostream& out) {
    if (!doc.ramification) reject("lower: the document has no ramification section");
    const auto& profile = *doc.ramification;
    if (doc.field) {
        auto violations = validate_profile(profile, *doc.field);
        if (!violations.empty()) reject(std::move(violations));
    }

    const auto lower = lower_breaks(profile);
    const auto psi = build_psi(profile);
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (psi_eval(psi, Rational(static_cast<long>(profile.breaks()[i].t))) != lower[i]) {
            throw std::logic_error("lower break recurrence disagrees with psi at break " + std::to_string(i + 1));
        }
    }
    const auto table = index_table(profile);
    const auto different = total_different_exponent(profile);
    const auto discriminant = disc_exponent_via_conductors(profile);
    if (different != discriminant) {
        throw std::logic_error("different exponent " + to_string(different) +
                               " disagrees with conductor sum " + to_string(discriminant));
    }

    if (opt.json) {
        json lj = json::array();
        for (const auto& l : lower) lj.push_back(integer_to_json(l));
        json tj = json::array();
        for (const auto& row : table) tj.push_back({{"interval", render(row.interval)}, {"index", integer_to_json(row.index)}});
        out << json{{"command", "lower"},
                    {"p", profile.p()},
                    {"upper", upper_json(profile.breaks())},
                    {"lower", lj},
                    {"index_table", tj},
                    {"different_exponent", integer_to_json(different)},
                    {"discriminant_exponent", integer_to_json(discriminant)}}
                   .dump(2)
            << '\n';
        return kExitOk;
    }

    out << "p: " << profile.p() << '\n';
    out << "upper breaks (t, f): " << render_upper(profile.breaks()) << '\n';
    out << "lower breaks:";
    if (lower.empty()) out << " (none)";
    for (const auto& l : lower) out << ' ' << l;
    out << '\n';
    std::size_t width = std::string("w in").size();
    for (const auto& row : table) width = std::max(width, render(row.interval).size());
    out << "index table:\n";
    out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << "w in" << "(G^0:G^w)\n";
    for (const auto& row : table) {
        out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << render(row.interval) << row.index
            << '\n';
    }
    out << "different exponent: " << different << '\n';
    out << "discriminant exponent via conductors: " << discriminant << '\n';
    return kExitOk;
}

int cmd_upper(const ProfileDocument& doc, const CommandOptions& opt, std::ostream& out) {
    if (!doc.lower) reject("upper: the document has no lower section");
    const auto& lower = *doc.lower;
    std::optional<RamificationProfile> profile;
    try {
        profile = upper_breaks_from_lower(lower.p, lower.breaks);
    } catch (const NonRealizableError& e) {
        reject("not realizable at lower break " + std::to_string(e.index()) + ": " + e.what());
    }
    if (doc.field) {
        auto violations = validate_profile(*profile, *doc.field);
        if (!violations.empty()) reject(std::move(violations));
    }

    if (opt.json) {
        json lj = json::array();
        for (const auto& b : lower.breaks) lj.push_back({{"l", integer_to_json(b.l)}, {"f", b.f}});
        out << json{{"command", "upper"}, {"p", lower.p}, {"lower", lj}, {"upper", upper_json(profile->breaks())}}.dump(2)
            << '\n';
        return kExitOk;
    }
    out << "p: " << lower.p << '\n';
    out << "lower breaks (l, f):";
    if (lower.breaks.empty()) out << " (none)";
    for (const auto& b : lower.breaks) out << " (" << b.l << ", " << b.f << ')';
    out << '\n';
    out << "upper breaks (t, f): " << render_upper(profile->breaks()) << '\n';
    return kExitOk;
}

int cmd_admissible(const ProfileDocument& doc, const CommandOptions& opt, std::ostream& out) {
    if (!doc.field) reject("admissible: the document has no field section");
    const auto& field = *doc.field;
    if (field.is_equal_characteristic() && !opt.bound) {
        reject("admissible: characteristic p needs --bound N");
    }
    const auto set = admissible_set(field, opt.bound);
    const std::vector<std::int64_t> values(set.begin(), set.end());
    std::vector<std::string> violations;
    if (doc.ramification) violations = validate_profile(*doc.ramification, field);

    if (opt.json) {
        json fj = {{"p", field.p()}, {"characteristic", field.characteristic()}};
        if (!field.is_equal_characteristic()) {
            fj["e"] = *field.e();
            fj["zeta_p_in_K"] = field.zeta_p_in_K();
        }
        json j = {{"command", "admissible"}, {"field", fj}, {"admissible", values}};
        if (opt.bound) j["bound"] = *opt.bound;
        if (doc.ramification) {
            j["profile_valid"] = violations.empty();
            j["violations"] = violations;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "field: p = " << field.p() << ", characteristic " << field.characteristic();
        if (!field.is_equal_characteristic()) {
            out << ", e = " << *field.e() << (field.zeta_p_in_K() ? ", zeta_p in K" : ", zeta_p not in K");
        }
        out << '\n';
        if (opt.bound) out << "bound: " << *opt.bound << '\n';
        out << "admissible breaks: {" << join_ints(values, ", ") << "}\n";
        if (doc.ramification) {
            out << "profile verdict: " << (violations.empty() ? "valid" : "invalid") << '\n';
            for (const auto& v : violations) out << "  violation: " << v << '\n';
        }
    }
    if (!violations.empty()) reject(std::move(violations));
    return kExitOk;
}

int cmd_group_check(const ProfileDocument& doc, const CommandOptions& opt, std::ostream& out) {
    if (!doc.group) reject("group-check: the document has no group section");
    const auto& section = *doc.group;
    const FiniteGroup group = load_group(section, opt.base_dir);
    const std::uint64_t derived = prime_of_p_group(group);
    std::uint64_t p = section.p ? static_cast<std::uint64_t>(*section.p) : derived;
    if (p == 0) {
        if (group.order() != 1) reject("group of order " + std::to_string(group.order()) + " is not a p-group");
        const auto dp = document_prime(doc);
        if (!dp) reject("trivial group: give group.p");
        p = static_cast<std::uint64_t>(*dp);
    }
    if (group.order() > 1 && derived != p) {
        reject("group of order " + std::to_string(group.order()) + " is not a " + std::to_string(p) + "-group");
    }
    if (const auto dp = document_prime(doc); dp && static_cast<std::uint64_t>(*dp) != p) {
        reject("prime mismatch: group is a " + std::to_string(p) + "-group, document has p = " + std::to_string(*dp));
    }

    const auto subgroups = all_subgroups(group);
    const auto maximal = index_p_subgroups(group, p);
    const bool intersection = has_intersection_property(group, p);
    const bool elementary = is_elementary_abelian(group, p);
    const std::string label = section.builtin ? *section.builtin : section.cayley_file ? *section.cayley_file : "table";

    if (opt.json) {
        out << json{{"command", "group-check"},
                    {"group", label},
                    {"order", group.order()},
                    {"p", p},
                    {"subgroups", subgroups.size()},
                    {"index_p_subgroups", maximal.size()},
                    {"intersection_property", intersection},
                    {"elementary_abelian", elementary},
                    {"agree", intersection == elementary}}
                   .dump(2)
            << '\n';
    } else {
        out << "group: " << label << " (order " << group.order() << ", p = " << p << ")\n";
        out << "subgroups: " << subgroups.size() << '\n';
        out << "index-p subgroups: " << maximal.size() << '\n';
        out << "intersection property: " << (intersection ? "true" : "false") << '\n';
        out << "elementary abelian: " << (elementary ? "true" : "false") << '\n';
        out << "agreement: " << (intersection == elementary ? "yes" : "NO") << '\n';
    }
    if (intersection != elementary) {
        throw std::logic_error("intersection property and elementary abelian verdicts disagree");
    }
    return kExitOk;
}

int cmd_as_break(const ProfileDocument& doc, const CommandOptions& opt, std::ostream& out) {
    if (!doc.artin_schreier) reject("as-break: the document has no artin_schreier section");
    const auto& f = *doc.artin_schreier;
    const auto reduced = reduce(f);
    const auto cls = classify(f);
    std::optional<Integer> different;
    if (cls.kind == ASKind::Ramified) different = different_exponent_degree_p(*cls.break_value, f.p());

    if (opt.json) {
        json j = {{"command", "as-break"},
                  {"p", f.p()},
                  {"input", to_string(f)},
                  {"reduced", to_string(reduced)},
                  {"classification", to_string(cls.kind)}};
        if (cls.break_value) {
            j["break"] = *cls.break_value;
            j["different_exponent"] = integer_to_json(*different);
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "p: " << f.p() << '\n';
    out << "input: " << to_string(f) << '\n';
    out << "reduced: " << to_string(reduced) << '\n';
    out << "classification: " << to_string(cls.kind) << '\n';
    if (cls.break_value) {
        out << "break: " << *cls.break_value << '\n';
        out << "different exponent: " << *different << '\n';
    }
    return kExitOk;
}

}  // namespace

std::optional<Command> command_from_name(const std::string& name) {
    if (name == "lower") return Command::Lower;
    if (name == "upper") return Command::Upper;
    if (name == "admissible") return Command::Admissible;
    if (name == "group-check") return Command::GroupCheck;
    if (name == "as-break") return Command::AsBreak;
    return std::nullopt;
}

std::string command_name(Command command) {
    switch (command) {
        case Command::Lower: return "lower";
        case Command::Upper: return "upper";
        case Command::Admissible: return "admissible";
        case Command::GroupCheck: return "group-check";
        case Command::AsBreak: return "as-break";
    }
    return "?";
}

int run_command(Command command, const ProfileDocument& doc, const CommandOptions& options, std::ostream& out,
                std::ostream& err) {
    // Reports are buffered so a failing command never leaves partial output,
    // except admissible, whose verdict is part of the report.
    std::ostringstream buffer;
    try {
        int code = kExitOk;
        switch (command) {
            case Command::Lower: code = cmd_lower(doc, options, buffer); break;
            case Command::Upper: code = cmd_upper(doc, options, buffer); break;
            case Command::Admissible: code = cmd_admissible(doc, options, buffer); break;
            case Command::GroupCheck: code = cmd_group_check(doc, options, buffer); break;
            case Command::AsBreak: code = cmd_as_break(doc, options, buffer); break;
        }
        out << buffer.str();
        return code;
    } catch (const Rejected& r) {
        if (command == Command::Admissible) out << buffer.str();
        err << "ramfilt " << command_name(command) << ": validation failed\n";
        for (const auto& v : r.violations) err << "  " << v << '\n';
        return kExitValidation;
    } catch (const ValidationError& e) {
        err << "ramfilt " << command_name(command) << ": validation failed\n";
        for (const auto& v : e.violations()) err << "  " << v << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "ramfilt " << command_name(command) << ": internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

int run_command_on_file(Command command, const std::filesystem::path& path, CommandOptions options,
                        std::ostream& out, std::ostream& err) {
    ProfileDocument doc;
    try {
        doc = load_document(path);
    } catch (const ValidationError& e) {
        err << "ramfilt " << command_name(command) << ": cannot load " << path.string() << '\n';
        for (const auto& v : e.violations()) err << "  " << v << '\n';
        return kExitValidation;
    }
    if (path.has_parent_path()) options.base_dir = path.parent_path();
    return run_command(command, doc, options, out, err);
}

}  // namespace ramfilt
