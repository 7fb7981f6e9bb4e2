#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgk/catalog.hpp"

namespace bgk {

inline constexpr const char kVersion[] = "0.1.0";

/* One rendered space: a presentation together with its Poincare series at
 * the presentation's own truncation. */
struct SpaceReport {
    std::string key;  // "BGk", "Omega3G3", "BG", "G", "Anick"
    AlgebraPresentation pres;
    PowerSeries series;
};

struct MhReport {
    std::vector<int> degrees;
    std::optional<std::vector<int>> printed_variant;  // only with verbose output
};

struct AuditMismatch {
    std::string space;
    int degree = 0;
    Int emitted;
    Int recomputed;
};

struct AuditReport {
    long long checked = 0;
    std::vector<AuditMismatch> mismatches;
    bool passed() const { return mismatches.empty(); }
};

/* Everything one CLI invocation emits, in one structure, so that text,
 * JSON and CSV are projections of the same data. */
struct OutputDocument {
    std::string group_raw;  // the --group argument as typed
    GroupType type;
    int prime = 0;
    std::optional<long long> chern;
    std::optional<int> max_degree;
    std::optional<std::string> space_request;
    ApplicabilityVerdict applicability;
    std::vector<SpaceReport> spaces;
    std::optional<MhReport> mh;
    std::vector<std::string> notes;
    std::optional<AuditReport> audit;
};

OutputDocument make_verdict_document(const std::string& raw, const GroupType& type, int p,
                                     long long chern);

/* Regime-routed: FullTheorem emits BGk, Omega3G3, BG, G and the MH odd
 * degrees; SU2Mod3 emits BGk, Omega3G3, G and MH.  Anything else raises
 * hypothesis_error naming the failed condition. */
OutputDocument make_compute_document(const std::string& raw, const GroupType& type, int p,
                                     long long chern, int trunc, bool verbose);

// One space only; gated on p-regularity (and odd p), not on the full theorem.
OutputDocument make_generators_document(const std::string& raw, const GroupType& type, int p,
                                        int trunc, const std::string& space, bool verbose);

/* Recomputes every emitted dimension with the monomial oracle.
 * inject_degree >= 0 perturbs the emitted BGk value at that degree by one,
 * so the failure path of the audit can be exercised. */
AuditReport run_oracle_audit(const OutputDocument& doc, int inject_degree = -1);

std::string render_text(const OutputDocument& doc, bool color = false);
std::string render_json(const OutputDocument& doc);
std::string render_csv(const OutputDocument& doc);

// RFC 4180 field quoting.
std::string csv_escape(const std::string& field);

}  // namespace bgk
