#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jetinv/rational.hpp"

namespace jetinv {

struct SuiteConfig {
    std::string suite;
    int n = 2;
    int order = 3;
    int trials = 20;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    std::vector<Rat> alphas;
    bool has_u0 = false;
    Rat u0;
    int s = 0; // syzygy tensor degree; 0 draws s in {2,3} per case
    std::string out_path;

    void validate() const;
};

/// One verification record. `kind` partitions the suite into exact records
/// (pass iff residual is exactly zero), numeric records (pass iff residual
/// below the configured tolerance) and recorded-only values that never fail.
struct CaseRecord {
    int index = 0;
    std::string label;
    std::string kind; // "exact" | "numeric" | "recorded"
    std::string inputs;
    std::string lhs, rhs;
    std::string residual;
    bool pass = true;
};

struct Report {
    std::string suite;
    SuiteConfig config;
    std::vector<CaseRecord> records;
    int failure_count = 0;
    double max_numeric_residual = 0;
    double wall_ms = 0; // programmatic only; kept out of the canonical bytes

    /// Canonical JSON: sorted keys, rationals as strings, floats printed with
    /// 17 significant digits. Identical configs produce identical bytes, so
    /// the volatile wall time is not serialized.
    std::string to_json() const;
};

std::string fmt_float(double v);

/// Exact-record helper: pass iff residual == 0.
CaseRecord exact_record(int index, std::string label, std::string inputs, const Rat& lhs,
                        const Rat& rhs);

/// Numeric-record helper: pass iff |residual| < tolerance.
CaseRecord numeric_record(int index, std::string label, std::string inputs, double residual,
                          double tolerance);

/// Recorded-only helper (never fails).
CaseRecord recorded(int index, std::string label, std::string inputs, std::string value);

void finalize(Report& rep);

/// Writes the canonical JSON; creates/overwrites path. IO errors surface
/// verbatim as Error.
void emit_report(const Report& rep, const std::string& path);

} // namespace jetinv
