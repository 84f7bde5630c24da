#include "qr/census.hpp"

#include <algorithm>
#include <sstream>

#include "qr/error.hpp"
#include "qr/json_io.hpp"
#include "qr/parallel.hpp"

namespace qr {

CensusAggregates aggregate(const CensusReport& report) {
  CensusAggregates agg;
  agg.total = int(report.rows.size());
  for (const CensusRow& r : report.rows) {
    agg.classical += r.cls.classical;
    agg.unital += r.cls.unital;
    agg.additive += r.cls.additive;
    agg.multiplicative += r.cls.multiplicative;
    agg.quadratic += r.cls.quadratic;
  }
  auto count_mode = [&](auto member) {
    int c = 0;
    for (const CensusRow& r : report.rows) c += (r.*member) && (r.*member)->feasible;
    return c;
  };
  if (report.modes.gen1) agg.gen1_feasible = count_mode(&CensusRow::gen1);
  if (report.modes.gen2) agg.gen2_feasible = count_mode(&CensusRow::gen2);
  if (report.modes.actualize) agg.actualized_feasible = count_mode(&CensusRow::actualized);

  struct Combo {
    std::string name;
    std::vector<std::optional<FilterVerdict> CensusRow::*> members;
    bool run;
  };
  std::vector<Combo> combos = {
      {"gen1&gen2", {&CensusRow::gen1, &CensusRow::gen2}, report.modes.gen1 && report.modes.gen2},
      {"gen1&actualize",
       {&CensusRow::gen1, &CensusRow::actualized},
       report.modes.gen1 && report.modes.actualize},
      {"gen2&actualize",
       {&CensusRow::gen2, &CensusRow::actualized},
       report.modes.gen2 && report.modes.actualize},
      {"gen1&gen2&actualize",
       {&CensusRow::gen1, &CensusRow::gen2, &CensusRow::actualized},
       report.modes.gen1 && report.modes.gen2 && report.modes.actualize},
  };
  for (const Combo& combo : combos) {
    if (!combo.run) continue;
    int c = 0;
    for (const CensusRow& r : report.rows)
      c += std::all_of(combo.members.begin(), combo.members.end(),
                       [&](auto m) { return (r.*m) && (r.*m)->feasible; });
    agg.inclusion.emplace_back(combo.name, c);
  }
  return agg;
}

CensusReport run_census(int n, const CensusModes& modes, int jobs, const SolveOptions& opt) {
  bool filters = modes.gen1 || modes.gen2 || modes.actualize;
  if (filters && n > 3)
    throw Error("census filter modes are limited to n <= 3; n=" + std::to_string(n) +
                " would exhaust the branch budget");
  std::vector<CoeventTable> all = enumerate_coevents(n);  // refuses n > 4

  CensusReport report;
  report.n = n;
  report.modes = modes;
  report.rows.resize(all.size());
  parallel_for(all.size(), jobs, [&](std::size_t i) {
    const CoeventTable& phi = all[i];
    CensusRow row;
    row.index = int(phi.bits >> 1);
    row.coevent = coevent_to_string(phi);
    row.cls = classify(phi);
    if (modes.gen1) row.gen1 = check_1generated_existential(phi, opt);
    if (modes.gen2) row.gen2 = check_2generated_existential(phi, opt);
    if (modes.actualize) row.actualized = check_actualized_existential(phi, opt);
    report.rows[i] = std::move(row);
  });
  return report;
}

ReportFormat report_format_from_name(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "markdown") return ReportFormat::markdown;
  throw ParseError("unknown report format '" + s + "' (expected json, csv or markdown)");
}

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

std::string mode_cell(const std::optional<FilterVerdict>& v) {
  if (!v) return "";
  return v->feasible ? "feasible" : "infeasible";
}

Json aggregates_to_json(const CensusReport& report) {
  CensusAggregates agg = aggregate(report);
  Json j{{"total", agg.total},          {"classical", agg.classical},
         {"unital", agg.unital},        {"additive", agg.additive},
         {"multiplicative", agg.multiplicative}, {"quadratic", agg.quadratic}};
  if (agg.gen1_feasible >= 0) j["gen1_feasible"] = agg.gen1_feasible;
  if (agg.gen2_feasible >= 0) j["gen2_feasible"] = agg.gen2_feasible;
  if (agg.actualized_feasible >= 0) j["actualized_feasible"] = agg.actualized_feasible;
  if (!agg.inclusion.empty()) {
    Json inc = Json::object();
    for (const auto& [name, c] : agg.inclusion) inc[name] = c;
    j["inclusion"] = inc;
  }
  return j;
}

}  // namespace

std::string emit_report(const CensusReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    Json rows = Json::array();
    for (const CensusRow& r : report.rows) {
      Json row{{"index", r.index},
               {"coevent", r.coevent},
               {"classical", r.cls.classical},
               {"unital", r.cls.unital},
               {"additive", r.cls.additive},
               {"multiplicative", r.cls.multiplicative},
               {"quadratic", r.cls.quadratic}};
      if (r.gen1) row["gen1"] = verdict_to_json(*r.gen1);
      if (r.gen2) row["gen2"] = verdict_to_json(*r.gen2);
      if (r.actualized) row["actualized"] = verdict_to_json(*r.actualized);
      rows.push_back(std::move(row));
    }
    Json j{{"schema_version", report.schema_version},
           {"n", report.n},
           {"modes",
            Json{{"classify", report.modes.classify},
                 {"gen1", report.modes.gen1},
                 {"gen2", report.modes.gen2},
                 {"actualize", report.modes.actualize}}},
           {"aggregates", aggregates_to_json(report)},
           {"rows", rows}};
    return j.dump(2) + "\n";
  }

  if (format == ReportFormat::csv) {
    std::ostringstream out;
    out << "coevent,classical,unital,additive,multiplicative,quadratic,gen1,gen2,actualized\n";
    for (const CensusRow& r : report.rows) {
      out << '"' << r.coevent << '"' << ',' << yn(r.cls.classical) << ',' << yn(r.cls.unital)
          << ',' << yn(r.cls.additive) << ',' << yn(r.cls.multiplicative) << ','
          << yn(r.cls.quadratic) << ',' << mode_cell(r.gen1) << ',' << mode_cell(r.gen2) << ','
          << mode_cell(r.actualized) << "\n";
    }
    return out.str();
  }

  std::ostringstream out;
  out << "# Coevent census, n=" << report.n << "\n\n";
  CensusAggregates agg = aggregate(report);
  out << "- total: " << agg.total << "\n- classical: " << agg.classical
      << "\n- unital: " << agg.unital << "\n- additive: " << agg.additive
      << "\n- multiplicative: " << agg.multiplicative << "\n- quadratic: " << agg.quadratic
      << "\n";
  if (agg.gen1_feasible >= 0) out << "- gen1 feasible: " << agg.gen1_feasible << "\n";
  if (agg.gen2_feasible >= 0) out << "- gen2 feasible: " << agg.gen2_feasible << "\n";
  if (agg.actualized_feasible >= 0)
    out << "- actualized feasible: " << agg.actualized_feasible << "\n";
  for (const auto& [name, c] : agg.inclusion) out << "- " << name << ": " << c << "\n";
  out << "\n| index | coevent | classical | unital | additive | multiplicative | quadratic |"
      << " gen1 | gen2 | actualized |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|\n";
  auto cell = [](const std::optional<FilterVerdict>& v) {
    return v ? (v->feasible ? "feasible" : "infeasible") : "-";
  };
  for (const CensusRow& r : report.rows)
    out << "| " << r.index << " | `" << r.coevent << "` | " << yn(r.cls.classical) << " | "
        << yn(r.cls.unital) << " | " << yn(r.cls.additive) << " | " << yn(r.cls.multiplicative)
        << " | " << yn(r.cls.quadratic) << " | " << cell(r.gen1) << " | " << cell(r.gen2)
        << " | " << cell(r.actualized) << " |\n";
  return out.str();
}

std::string aggregate_line(const CensusReport& report) {
  CensusAggregates agg = aggregate(report);
  std::ostringstream out;
  out << "total=" << agg.total << " classical=" << agg.classical << " unital=" << agg.unital
      << " additive=" << agg.additive << " multiplicative=" << agg.multiplicative
      << " quadratic=" << agg.quadratic;
  if (agg.gen1_feasible >= 0) out << " gen1_feasible=" << agg.gen1_feasible;
  if (agg.gen2_feasible >= 0) out << " gen2_feasible=" << agg.gen2_feasible;
  if (agg.actualized_feasible >= 0) out << " actualized_feasible=" << agg.actualized_feasible;
  return out.str();
}

UniquenessReport uniqueness_experiment(int n, const std::vector<QMeasure>& measures,
                                       const std::vector<Mode>& modes, int jobs,
                                       const SolveOptions& opt) {
  for (const QMeasure& m : measures)
    if (m.n != n) throw Error("measure size mismatch in uniqueness experiment");
  std::vector<CoeventTable> quads = enumerate_coevents(n, ClassFilter::quadratic);

  UniquenessReport report;
  report.n = n;
  report.modes = modes;
  report.entries.resize(measures.size());
  parallel_for(measures.size(), jobs, [&](std::size_t i) {
    UniquenessEntry entry;
    entry.mu = measures[i];
    for (const CoeventTable& phi : quads) {
      for (Mode mode : modes) {
        FilterVerdict v = mode == Mode::gen1   ? check_1generated(phi, measures[i], opt)
                          : mode == Mode::gen2 ? check_2generated(phi, measures[i], opt)
                                               : check_actualized(phi, measures[i], opt);
        if (!v.feasible) continue;
        auto& list = mode == Mode::gen1   ? entry.gen1_coevents
                     : mode == Mode::gen2 ? entry.gen2_coevents
                                          : entry.actualize_coevents;
        list.push_back(coevent_to_string(phi));
      }
    }
    entry.flagged = entry.gen1_coevents.size() >= 2 || entry.gen2_coevents.size() >= 2;
    report.entries[i] = std::move(entry);
  });
  for (const UniquenessEntry& e : report.entries) report.flagged_count += e.flagged;
  return report;
}

namespace {

std::string measure_compact(const QMeasure& m) {
  std::string out;
  for (EventMask a = 1; a <= full_mask(m.n); ++a) {
    if (!out.empty()) out += ";";
    out += event_to_string(a) + "=" + rat_to_string(m.v[a]);
  }
  return out;
}

std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (const std::string& x : xs) {
    if (!out.empty()) out += "|";
    out += x;
  }
  return out;
}

bool has_mode(const std::vector<Mode>& modes, Mode m) {
  return std::find(modes.begin(), modes.end(), m) != modes.end();
}

}  // namespace

std::string emit_report(const UniquenessReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    Json entries = Json::array();
    for (const UniquenessEntry& e : report.entries) {
      Json entry{{"measure", measure_to_json(e.mu)}, {"flagged", e.flagged}};
      if (has_mode(report.modes, Mode::gen1)) entry["gen1"] = e.gen1_coevents;
      if (has_mode(report.modes, Mode::gen2)) entry["gen2"] = e.gen2_coevents;
      if (has_mode(report.modes, Mode::actualize)) entry["actualize"] = e.actualize_coevents;
      entries.push_back(std::move(entry));
    }
    Json names = Json::array();
    for (Mode m : report.modes) names.push_back(mode_name(m));
    Json j{{"schema_version", report.schema_version},
           {"n", report.n},
           {"modes", names},
           {"flagged_count", report.flagged_count},
           {"entries", entries}};
    return j.dump(2) + "\n";
  }

  if (format == ReportFormat::csv) {
    std::ostringstream out;
    out << "measure,gen1,gen2,actualize,flagged\n";
    for (const UniquenessEntry& e : report.entries)
      out << '"' << measure_compact(e.mu) << "\"," << joined(e.gen1_coevents) << ','
          << joined(e.gen2_coevents) << ',' << joined(e.actualize_coevents) << ','
          << yn(e.flagged) << "\n";
    return out.str();
  }

  std::ostringstream out;
  out << "# Uniqueness experiment, n=" << report.n << "\n\n";
  out << "flagged: " << report.flagged_count << " of " << report.entries.size() << "\n\n";
  out << "| measure | gen1 | gen2 | actualize | flagged |\n|---|---|---|---|---|\n";
  for (const UniquenessEntry& e : report.entries)
    out << "| `" << measure_compact(e.mu) << "` | " << joined(e.gen1_coevents) << " | "
        << joined(e.gen2_coevents) << " | " << joined(e.actualize_coevents) << " | "
        << yn(e.flagged) << " |\n";
  return out.str();
}

std::vector<QMeasure> measure_grid(int n, const std::vector<Rat>& values) {
  if (values.empty()) return {};
  std::size_t slots = std::size_t(n) + std::size_t(n) * (n - 1) / 2;
  std::vector<std::size_t> pick(slots, 0);
  std::vector<QMeasure> out;
  for (;;) {
    std::vector<Rat> sv, pv;
    for (std::size_t k = 0; k < slots; ++k)
      (k < std::size_t(n) ? sv : pv).push_back(values[pick[k]]);
    try {
      out.push_back(extend_from_pairs(n, sv, pv));
    } catch (const MeasureError&) {
      // negative extension or invalid combination: not a grid point
    }
    std::size_t k = slots;
    while (k > 0) {
      --k;
      if (++pick[k] < values.size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace qr
