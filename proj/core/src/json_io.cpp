#include "degdiam/json_io.hpp"

#include <string>

namespace degdiam {

using nlohmann::json;

json group_spec_to_json(const GroupSpec& spec) {
    switch (family_of(spec)) {
        case Family::cyclic: {
            const auto& s = std::get<SemidirectCyclicSpec>(spec);
            return json{{"family", "cyclic"}, {"m", s.m}, {"n", s.n}, {"a", s.a}};
        }
        case Family::square: {
            const auto& s = std::get<SemidirectSquareSpec>(spec);
            return json{{"family", "square"},
                        {"m", s.m},
                        {"n", s.n},
                        {"sigma", json::array({json::array({s.sigma.x, s.sigma.y}),
                                               json::array({s.sigma.z, s.sigma.t})})}};
        }
        case Family::doubled: {
            const auto& s = std::get<DoubledSpec>(spec).base;
            return json{{"family", "doubled"}, {"m", s.m}, {"n", s.n}, {"a", s.a}};
        }
    }
    return json{};
}

GroupSpec group_spec_from_json(const json& j) {
    try {
        if (!j.is_object()) throw SpecInvalid("group spec must be a JSON object");
        const std::string fam = j.at("family").get<std::string>();
        const auto m = j.at("m").get<std::int64_t>();
        const auto n = j.at("n").get<std::int64_t>();
        if (fam == "cyclic") return SemidirectCyclicSpec{m, n, j.at("a").get<std::int64_t>()};
        if (fam == "doubled")
            return DoubledSpec{SemidirectCyclicSpec{m, n, j.at("a").get<std::int64_t>()}};
        if (fam == "square") {
            const json& sg = j.at("sigma");
            if (!sg.is_array() || sg.size() != 2 || !sg[0].is_array() || sg[0].size() != 2 ||
                !sg[1].is_array() || sg[1].size() != 2)
                throw SpecInvalid("sigma must be [[x,y],[z,t]]");
            const Mat2 M{sg[0][0].get<std::int64_t>(), sg[0][1].get<std::int64_t>(),
                         sg[1][0].get<std::int64_t>(), sg[1][1].get<std::int64_t>()};
            return SemidirectSquareSpec{m, n, M};
        }
        throw SpecInvalid("unknown family \"" + fam + "\"");
    } catch (const json::exception& e) {
        throw SpecInvalid(std::string("group spec: ") + e.what());
    }
}

json element_to_json(const Element& e) {
    json arr = json::array();
    for (std::size_t i = 0; i < e.size; ++i) arr.push_back(e.c[i]);
    return arr;
}

Element element_from_json(const json& j) {
    if (!j.is_array() || j.size() < 2 || j.size() > 4)
        throw ParseError("element must be an integer array of length 2..4, got " + j.dump());
    Element e;
    e.size = j.size();
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw ParseError("element coordinate must be an integer, got " + j[i].dump());
        e.c[i] = j[i].get<std::int64_t>();
    }
    return e;
}

json stats_to_json(const CayleyStats& stats) {
    json j{{"order", stats.order},
           {"degree", stats.degree},
           {"distance_histogram", stats.distance_histogram},
           {"reached", stats.reached},
           {"connected", stats.connected}};
    if (stats.diameter)
        j["diameter"] = *stats.diameter;
    else
        j["diameter"] = nullptr;
    return j;
}

json search_result_to_json(const SearchConfig& config, const SearchResult& result) {
    json hits = json::array();
    for (const SearchHit& h : result.hits) {
        json gens = json::array();
        for (const Element& e : h.generators.elements()) gens.push_back(element_to_json(e));
        hits.push_back(json{{"trial", h.trial_index},
                            {"generators", gens},
                            {"diameter", h.stats.diameter ? json(*h.stats.diameter) : json()},
                            {"order", h.stats.order}});
    }
    json summary{{"trials", result.summary.trials}, {"connected", result.summary.connected}};
    summary["best_diameter"] =
        result.summary.best_diameter ? json(*result.summary.best_diameter) : json();
    return json{{"config", json{{"group", group_spec_to_json(config.group.spec())},
                                {"delta", config.delta},
                                {"target_diameter", config.target_diameter},
                                {"trials", config.trials},
                                {"seed", config.seed},
                                {"max_hits", config.max_hits}}},
                {"hits", hits},
                {"summary", summary}};
}

json record_to_json(const RecordEntry& entry) {
    json gens = json::array(), invs = json::array();
    for (const Element& e : entry.generators) gens.push_back(element_to_json(e));
    for (const auto& inv : entry.inverses) invs.push_back(inv ? element_to_json(*inv) : json());
    return json{{"delta", entry.delta},       {"diameter", entry.diameter},
                {"order", entry.order},       {"spec", group_spec_to_json(entry.spec)},
                {"generators", gens},         {"inverses", invs},
                {"orders", entry.orders}};
}

RecordEntry record_from_json(const json& j) {
    RecordEntry entry;
    std::string context = "record";
    try {
        if (!j.is_object()) throw ParseError("record must be a JSON object, got " + j.dump());
        entry.delta = j.at("delta").get<int>();
        entry.diameter = j.at("diameter").get<int>();
        context = "record (" + std::to_string(entry.delta) + "," +
                  std::to_string(entry.diameter) + ")";
        entry.order = j.at("order").get<std::int64_t>();
        entry.spec = group_spec_from_json(j.at("spec"));
        const json& gens = j.at("generators");
        const json& invs = j.at("inverses");
        const json& ords = j.at("orders");
        if (!gens.is_array() || !invs.is_array() || !ords.is_array())
            throw ParseError("generators, inverses and orders must be arrays");
        if (gens.empty() || gens.size() != invs.size() || gens.size() != ords.size())
            throw ParseError("generators (" + std::to_string(gens.size()) + "), inverses (" +
                             std::to_string(invs.size()) + ") and orders (" +
                             std::to_string(ords.size()) +
                             ") must be non-empty and equally long");
        for (const json& g : gens) entry.generators.push_back(element_from_json(g));
        for (const json& v : invs)
            entry.inverses.push_back(v.is_null()
                                         ? std::optional<Element>{}
                                         : std::optional<Element>{element_from_json(v)});
        for (const json& o : ords) {
            if (!o.is_number_integer() || o.get<std::int64_t>() < 1)
                throw ParseError("generator order must be a positive integer, got " + o.dump());
            entry.orders.push_back(o.get<std::int64_t>());
        }
        for (std::size_t i = 0; i < entry.inverses.size(); ++i)
            if (!entry.inverses[i] && entry.orders[i] != 2)
                throw ParseError("generator " + to_string(entry.generators[i]) +
                                 " has no listed inverse (self-inverse) but order " +
                                 std::to_string(entry.orders[i]) + ", expected 2");
    } catch (const json::exception& e) {
        throw ParseError(context + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(context + ": " + e.what());
    } catch (const SpecInvalid& e) {
        throw SpecInvalid(context + ": " + e.what());
    }

    // Generators and listed inverses must be canonical members of the group.
    try {
        const Group group = Group::validate(entry.spec);
        for (const Element& g : entry.generators) group.index(g);
        for (const auto& inv : entry.inverses)
            if (inv) group.index(*inv);
    } catch (const Error& e) {
        throw SpecInvalid(context + " [" + describe(entry.spec) + "]: " + e.what());
    }
    return entry;
}

json erratum_to_json(const Erratum& e) {
    return json{{"delta", e.delta},     {"diameter", e.diameter}, {"check", e.check},
                {"claimed", e.claimed}, {"computed", e.computed}, {"note", e.note}};
}

Erratum erratum_from_json(const json& j) {
    try {
        return Erratum{j.at("delta").get<int>(),          j.at("diameter").get<int>(),
                       j.at("check").get<std::string>(),  j.at("claimed").get<std::string>(),
                       j.at("computed").get<std::string>(), j.at("note").get<std::string>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("erratum: ") + e.what());
    }
}

namespace {

const char* status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::mismatch: return "mismatch";
        case VerifyStatus::skipped: return "skipped";
    }
    return "?";
}

}  // namespace

json report_to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back(json{{"name", c.name},
                              {"passed", c.passed},
                              {"known_erratum", c.known_erratum},
                              {"detail", c.detail}});
    return json{{"delta", report.delta},
                {"diameter", report.diameter},
                {"group", report.group_name},
                {"status", status_name(report.status)},
                {"checks", checks},
                {"stats", report.stats ? stats_to_json(*report.stats) : json()},
                {"skip_reason", report.skip_reason}};
}

json summary_to_json(const VerifySummary& summary) {
    json reports = json::array();
    for (const VerificationReport& r : summary.reports) reports.push_back(report_to_json(r));
    return json{{"passed", summary.passed},
                {"mismatched", summary.mismatched},
                {"skipped", summary.skipped},
                {"reports", reports}};
}

}  // namespace degdiam
