#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gbound/domain.hpp"
#include "gbound/interval.hpp"
#include "gbound/optimizer.hpp"

namespace gbound {

enum class Status { Pass, Fail, Inconclusive };
std::string_view to_string(Status s);

/// A published value v quoted to `digits` places means the true value lies
/// in [v, v + 10^-digits). True when u meets that window.
bool in_truncation_window(const Interval& u, double v, int digits = 3);

/// One verified claim. For count-style rows (EDGE_TABLE and the oracle rows)
/// paper_value is the number of checks, digits is 0 and computed is the
/// number that passed, so the same window rule applies.
struct ClaimRow {
    std::string claim_id;
    double paper_value = 0.0;
    int published_digits = 3;
    Interval computed{0.0};
    std::optional<Box> argmax;
    std::string kind; // location kind, empty when not applicable
    Status status = Status::Fail;
    double runtime_ms = 0.0;
    std::vector<std::string> notes; // per-check detail for the table format
};

struct SuiteOptions {
    BnBConfig cfg;
    std::uint64_t seed = 20240611;
    bool timing = true; // false: runtime_ms is reported as 0 for reproducible output
};

/// The ten claims followed by the oracle rows, in report order.
const std::vector<std::string>& all_claim_ids();

/// Rows for the selected ids in report order, duplicates dropped. Throws
/// invalid_argument for an unknown id. An empty selection gives no rows.
std::vector<ClaimRow> run_suite(const std::vector<std::string>& selection, const SuiteOptions& opts = {});

ClaimRow run_claim(std::string_view claim_id, const SuiteOptions& opts = {});

/// Plain maximization of one objective, compared with its published value
/// but without the claim-specific location checks.
ClaimRow objective_row(ObjectiveId id, const SuiteOptions& opts = {});

enum class Format { Table, Json, Csv };
/// "table", "json" or "csv"; throws invalid_argument otherwise.
Format parse_format(std::string_view text);

inline constexpr std::string_view kCsvHeader = "claim_id,paper_value,lo,hi,argmax_x,argmax_y,kind,status,runtime_ms";

void emit(const std::vector<ClaimRow>& rows, Format format, std::ostream& out);
/// Writes to `path`; throws runtime_error when the file cannot be written.
void emit(const std::vector<ClaimRow>& rows, Format format, const std::string& path);

bool all_pass(const std::vector<ClaimRow>& rows);

} // namespace gbound
