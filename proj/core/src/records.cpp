#include "degdiam/records.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "degdiam/json_io.hpp"
#include "degdiam/search.hpp"

namespace degdiam {

using nlohmann::json;

RecordFile load_record_file(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("record file: ") + e.what());
    }
    const json* records = nullptr;
    RecordFile out;
    if (doc.is_array()) {
        records = &doc;
    } else if (doc.is_object() && doc.contains("records")) {
        records = &doc.at("records");
        if (!records->is_array()) throw ParseError("\"records\" must be an array");
        if (doc.contains("errata")) {
            const json& errata = doc.at("errata");
            if (!errata.is_array()) throw ParseError("\"errata\" must be an array");
            for (const json& e : errata) out.errata.push_back(erratum_from_json(e));
        }
    } else {
        throw ParseError("record file must be a JSON array or a {\"records\": [...]} object");
    }
    std::size_t i = 0;
    for (const json& r : *records) {
        try {
            out.records.push_back(record_from_json(r));
        } catch (const ParseError& e) {
            throw ParseError("record #" + std::to_string(i) + ": " + e.what());
        } catch (const SpecInvalid& e) {
            throw SpecInvalid("record #" + std::to_string(i) + ": " + e.what());
        }
        ++i;
    }
    return out;
}

std::vector<RecordEntry> load_records(std::string_view json_text) {
    return load_record_file(json_text).records;
}

namespace {

bool matches_erratum(const std::vector<Erratum>& errata, const RecordEntry& entry,
                     const std::string& check, const std::string& claimed,
                     const std::string& computed) {
    for (const Erratum& e : errata)
        if (e.delta == entry.delta && e.diameter == entry.diameter && e.check == check &&
            e.claimed == claimed && e.computed == computed)
            return true;
    return false;
}

std::string opt_to_string(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("unreachable");
}

}  // namespace

VerificationReport verify_record(const RecordEntry& entry, std::int64_t max_vertices,
                                 const std::vector<Erratum>& errata) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.delta = entry.delta;
    rep.diameter = entry.diameter;
    rep.group_name = describe(entry.spec);

    bool mismatch = false;
    auto add_check = [&](const std::string& name, bool ok, const std::string& claimed,
                         const std::string& computed) {
        CheckResult c;
        c.name = name;
        c.passed = ok;
        if (ok) {
            c.detail = computed;
        } else {
            c.detail = "claimed " + claimed + ", computed " + computed;
            c.known_erratum = matches_erratum(errata, entry, name, claimed, computed);
            if (!c.known_erratum) mismatch = true;
        }
        rep.checks.push_back(std::move(c));
    };
    auto finish = [&](VerifyStatus status) {
        rep.status = status;
        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    };

    std::optional<Group> group;
    try {
        group.emplace(Group::validate(entry.spec));
    } catch (const Error& e) {
        add_check("spec_valid", false, "valid spec", e.what());
        return finish(VerifyStatus::mismatch);
    }

    // (1) claimed group order
    add_check("order", group->order() == entry.order, std::to_string(entry.order),
              std::to_string(group->order()));

    // (2) inverse closure reaches the claimed degree
    std::optional<GeneratorSet> set;
    try {
        set.emplace(GeneratorSet::close_under_inverses(*group, entry.generators));
        add_check("degree", set->degree() == entry.delta, std::to_string(entry.delta),
                  std::to_string(set->degree()) + " (" +
                      std::to_string(set->involution_count()) + " involutions)");
    } catch (const Error& e) {
        add_check("degree", false, std::to_string(entry.delta), e.what());
    }

    // (3) listed inverses; a blank cell claims the generator is self-inverse
    for (std::size_t i = 0; i < entry.generators.size(); ++i) {
        std::string computed;
        bool ok = false;
        try {
            const Element inv = group->inverse(entry.generators[i]);
            computed = to_string(inv);
            ok = entry.inverses[i] ? (inv == *entry.inverses[i]) : (inv == entry.generators[i]);
        } catch (const Error& e) {
            computed = e.what();
        }
        add_check("inverse[" + std::to_string(i) + "]", ok,
                  entry.inverses[i] ? to_string(*entry.inverses[i]) : "(self)", computed);
    }

    // (4) listed generator orders
    for (std::size_t i = 0; i < entry.generators.size(); ++i) {
        std::string computed;
        bool ok = false;
        try {
            const std::int64_t ord = group->element_order(entry.generators[i]);
            computed = std::to_string(ord);
            ok = (ord == entry.orders[i]);
        } catch (const Error& e) {
            computed = e.what();
        }
        add_check("generator_order[" + std::to_string(i) + "]", ok,
                  std::to_string(entry.orders[i]), computed);
    }

    // (5) BFS from the identity: connectivity and the claimed diameter
    bool bfs_ran = false;
    if (group->order() <= max_vertices && set) {
        try {
            const CayleyStats stats = bfs_stats(*set, max_vertices);
            rep.stats = stats;
            bfs_ran = true;
            add_check("connected", stats.connected, "connected",
                      stats.connected ? "connected"
                                      : "reached " + std::to_string(stats.reached) + " of " +
                                            std::to_string(stats.order));
            add_check("diameter", stats.diameter == std::optional<int>(entry.diameter),
                      std::to_string(entry.diameter), opt_to_string(stats.diameter));
        } catch (const Error& e) {
            add_check("bfs", false, "BFS completes", e.what());
        }
    }

    // (6) the claimed order cannot beat the degree/diameter bound
    try {
        const MooreBound bound = moore_bound(entry.delta, entry.diameter);
        add_check("moore_bound", bound.saturated || entry.order <= bound.value,
                  std::to_string(entry.order) + " <= bound", std::to_string(bound.value));
    } catch (const Error& e) {
        add_check("moore_bound", false, "bound computable", e.what());
    }

    if (mismatch) return finish(VerifyStatus::mismatch);
    if (!bfs_ran) {
        rep.skip_reason = "order " + std::to_string(group->order()) +
                          " exceeds the vertex budget " + std::to_string(max_vertices) +
                          "; BFS not run";
        return finish(VerifyStatus::skipped);
    }
    return finish(VerifyStatus::pass);
}

VerifySummary verify_all(const std::vector<RecordEntry>& records, std::int64_t max_vertices,
                         int threads, const std::vector<Erratum>& errata) {
    VerifySummary out;
    out.reports.resize(records.size());

    // Claimed order decides which entries serialize: big BFS scratch arrays
    // must not pile up across workers.
    constexpr std::int64_t kBigOrder = 1'000'000;
    std::atomic<std::size_t> cursor{0};
    std::mutex big_bfs;
    auto work = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= records.size()) return;
            if (records[i].order > kBigOrder && records[i].order <= max_vertices) {
                std::lock_guard<std::mutex> lock(big_bfs);
                out.reports[i] = verify_record(records[i], max_vertices, errata);
            } else {
                out.reports[i] = verify_record(records[i], max_vertices, errata);
            }
        }
    };

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(records.size())));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (const VerificationReport& r : out.reports) {
        switch (r.status) {
            case VerifyStatus::pass: ++out.passed; break;
            case VerifyStatus::mismatch: ++out.mismatched; break;
            case VerifyStatus::skipped: ++out.skipped; break;
        }
    }
    return out;
}

}  // namespace degdiam
