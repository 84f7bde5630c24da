#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qr/coevent.hpp"
#include "qr/filters.hpp"
#include "qr/qmeasure.hpp"

namespace qr {

struct CensusModes {
  bool classify = false;
  bool gen1 = false;
  bool gen2 = false;
  bool actualize = false;
};

struct CensusRow {
  int index = 0;          // table bits >> 1, ascending
  std::string coevent;    // canonical polynomial
  CoeventClass cls;
  std::optional<FilterVerdict> gen1, gen2, actualized;
};

struct CensusAggregates {
  int total = 0;
  int classical = 0, unital = 0, additive = 0, multiplicative = 0, quadratic = 0;
  int gen1_feasible = -1, gen2_feasible = -1, actualized_feasible = -1;  // -1: not run
  // overlap counts among computed filter classes, keyed "gen1&gen2" etc.
  std::vector<std::pair<std::string, int>> inclusion;
};

struct CensusReport {
  int schema_version = 1;
  int n = 0;
  CensusModes modes;
  std::vector<CensusRow> rows;  // every coevent, ascending index
};

CensusAggregates aggregate(const CensusReport& report);

// Every coevent on n points, classified and (per requested mode) decided by
// the existential solver. Rows are computed concurrently and merged in index
// order, so reports are byte-identical across job counts and reruns. Filter
// modes are refused for n > 3 (resource guard); classify-only runs allow n <= 4.
CensusReport run_census(int n, const CensusModes& modes, int jobs = 0,
                        const SolveOptions& opt = {});

enum class ReportFormat { json, csv, markdown };
ReportFormat report_format_from_name(const std::string& s);

// json: schema_version 1 with rows, witnesses, aggregates;
// csv: fixed column order
//      coevent,classical,unital,additive,multiplicative,quadratic,gen1,gen2,actualized
//      (empty cell = mode not run);
// markdown: aggregate and per-row tables.
std::string emit_report(const CensusReport& report, ReportFormat format);

// "total=128 classical=3 ..." plus per-mode feasible counts; the census
// subcommand prints this line.
std::string aggregate_line(const CensusReport& report);

// Per measure: which quadratic coevents each requested mode generates.
struct UniquenessEntry {
  QMeasure mu;
  std::vector<std::string> gen1_coevents, gen2_coevents, actualize_coevents;
  bool flagged = false;  // >= 2 coevents under gen1 or gen2 (uniqueness breach)
};

struct UniquenessReport {
  int schema_version = 1;
  int n = 0;
  std::vector<Mode> modes;
  std::vector<UniquenessEntry> entries;
  int flagged_count = 0;
};

UniquenessReport uniqueness_experiment(int n, const std::vector<QMeasure>& measures,
                                       const std::vector<Mode>& modes, int jobs = 0,
                                       const SolveOptions& opt = {});

std::string emit_report(const UniquenessReport& report, ReportFormat format);

// All q-measures whose singleton and doubleton values come from `values`
// (full tables via the grade-2 extension; combinations whose extension goes
// negative are skipped). Deterministic order.
std::vector<QMeasure> measure_grid(int n, const std::vector<Rat>& values);

}  // namespace qr
