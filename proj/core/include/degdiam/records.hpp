#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degdiam/cayley.hpp"
#include "degdiam/group.hpp"

namespace degdiam {

/// One published table row: a group, the raw generator list as printed, and
/// the claimed order, degree, diameter, inverses, and generator orders.
/// Involutions carry no inverse entry (they are their own).
struct RecordEntry {
    int delta = 0;
    int diameter = 0;
    std::int64_t order = 0;
    GroupSpec spec;
    std::vector<Element> generators;
    std::vector<std::optional<Element>> inverses;
    std::vector<std::int64_t> orders;
};

/// A documented discrepancy in the source table. Verification waives a
/// failing check only when the record id, check name, claimed and computed
/// values all match exactly; anything else stays a hard mismatch.
struct Erratum {
    int delta = 0;
    int diameter = 0;
    std::string check;
    std::string claimed;
    std::string computed;
    std::string note;
};

struct RecordFile {
    std::vector<RecordEntry> records;
    std::vector<Erratum> errata;
};

/// Parses either a bare JSON array of record objects or a
/// {"records": [...], "errata": [...]} document. Throws ParseError (malformed
/// JSON or wrong shapes, with record context) and SpecInvalid (a record whose
/// group spec fails validation or whose generators are out of range, naming
/// the record).
RecordFile load_record_file(std::string_view json_text);

/// Records of load_record_file, discarding errata.
std::vector<RecordEntry> load_records(std::string_view json_text);

/// The built-in dataset as shipped, one JSON document.
const std::string& embedded_records_json();

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Failed, but documented in the errata; does not count as a mismatch.
    bool known_erratum = false;
    std::string detail;
};

enum class VerifyStatus { pass, mismatch, skipped };

struct VerificationReport {
    int delta = 0;
    int diameter = 0;
    std::string group_name;
    VerifyStatus status = VerifyStatus::skipped;
    std::vector<CheckResult> checks;
    std::optional<CayleyStats> stats;
    std::string skip_reason;
    double elapsed_seconds = 0.0;
};

/// Recomputes every claimed quantity, in order: group order, closed degree,
/// each listed inverse, each generator order, BFS connectivity and diameter,
/// and the Moore bound sanity check. Entries whose order exceeds max_vertices
/// still run every non-BFS check; if those all pass the report is skipped
/// with the reason, never a silent pass. Never throws: failures, including
/// invalid specs, are captured in the report.
VerificationReport verify_record(const RecordEntry& entry,
                                 std::int64_t max_vertices = kDefaultMaxVertices,
                                 const std::vector<Erratum>& errata = {});

struct VerifySummary {
    std::vector<VerificationReport> reports;
    int passed = 0;
    int mismatched = 0;
    int skipped = 0;
};

/// Verifies all records, in input order. threads > 1 verifies concurrently;
/// at most one BFS over 10^6 vertices is in flight at a time.
VerifySummary verify_all(const std::vector<RecordEntry>& records,
                         std::int64_t max_vertices = kDefaultMaxVertices, int threads = 1,
                         const std::vector<Erratum>& errata = {});

}  // namespace degdiam
