#include "qr/json_io.hpp"

#include <cstdio>
#include <fstream>

#include "qr/error.hpp"

namespace qr {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw ParseError("expected a rational as \"p\", \"p/q\" or an integer");
}

int n_from_json(const Json& j) {
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw ParseError("missing integer field \"n\"");
  int n = j.at("n").get<int>();
  if (n < 1 || n > 5) throw ParseError("n out of range 1..5");
  return n;
}

const Json& object_field(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_object())
    throw ParseError("missing object field \"" + key + "\"");
  return j.at(key);
}

}  // namespace

Json measure_to_json(const QMeasure& m) {
  Json values = Json::object();
  for (EventMask a = 0; a <= full_mask(m.n); ++a)
    values[event_to_string(a)] = rat_to_string(m.v[a]);
  return Json{{"n", m.n}, {"values", values}};
}

QMeasure measure_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("measure document must be a JSON object");
  int n = n_from_json(j);

  if (j.contains("values")) {
    if (j.contains("singletons") || j.contains("pairs"))
      throw ParseError("give either \"values\" or \"singletons\"+\"pairs\", not both");
    const Json& values = object_field(j, "values");
    QMeasure m{n, std::vector<Rat>(std::size_t{1} << n, Rat(0))};
    std::vector<bool> got(std::size_t{1} << n, false);
    for (const auto& [key, val] : values.items()) {
      EventMask a = parse_event(key, n);
      if (got[a]) throw ParseError("event " + key + " given twice");
      got[a] = true;
      m.v[a] = rat_from_json(val);
    }
    for (EventMask a = 0; a <= full_mask(n); ++a)
      if (!got[a]) throw ParseError("missing value for " + event_to_string(a));
    validate(m);
    return m;
  }

  if (j.contains("singletons") && j.contains("pairs")) {
    const Json& singles = object_field(j, "singletons");
    const Json& pairs = object_field(j, "pairs");
    std::vector<Rat> sv(n, Rat(0)), pv(std::size_t(n) * (n - 1) / 2, Rat(0));
    std::vector<bool> sgot(n, false), pgot(pv.size(), false);
    for (const auto& [key, val] : singles.items()) {
      int i = 0;
      try {
        i = std::stoi(key);
      } catch (...) {
        throw ParseError("bad singleton key \"" + key + "\"");
      }
      if (i < 1 || i > n) throw ParseError("singleton key out of range: " + key);
      if (sgot[i - 1]) throw ParseError("singleton " + key + " given twice");
      sgot[i - 1] = true;
      sv[i - 1] = rat_from_json(val);
    }
    for (const auto& [key, val] : pairs.items()) {
      EventMask a = parse_event(key, n);
      if (popcount(a) != 2) throw ParseError("pair key " + key + " is not a doubleton");
      int i = 0, jj = 0;
      for (int k = 1; k <= n; ++k)
        if (contains(a, k)) (i == 0 ? i : jj) = k;
      std::size_t idx = 0, at = 0;
      for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y, ++at)
          if (x == i && y == jj) idx = at;
      if (pgot[idx]) throw ParseError("pair " + key + " given twice");
      pgot[idx] = true;
      pv[idx] = rat_from_json(val);
    }
    for (int i = 0; i < n; ++i)
      if (!sgot[i]) throw ParseError("missing singleton " + std::to_string(i + 1));
    for (std::size_t k = 0; k < pgot.size(); ++k)
      if (!pgot[k]) throw ParseError("missing a pair value");
    return extend_from_pairs(n, sv, pv);
  }

  throw ParseError("measure document needs \"values\" or \"singletons\"+\"pairs\"");
}

Json density1_to_json(const Density1& f) {
  Json obj = Json::object();
  for (int i = 1; i <= f.n; ++i) obj[std::to_string(i)] = rat_to_string(f(i));
  return Json{{"f", obj}};
}

Density1 density1_from_json(const Json& j) {
  const Json& obj = object_field(j, "f");
  int n = int(obj.size());
  if (n < 1 || n > 5) throw ParseError("density point count out of range 1..5");
  Density1 f{n, std::vector<Rat>(n, Rat(0))};
  std::vector<bool> got(n, false);
  for (const auto& [key, val] : obj.items()) {
    int i = 0;
    try {
      i = std::stoi(key);
    } catch (...) {
      throw ParseError("bad density key \"" + key + "\"");
    }
    if (i < 1 || i > n) throw ParseError("density key out of range: " + key);
    if (got[i - 1]) throw ParseError("density key " + key + " given twice");
    got[i - 1] = true;
    f.v[i - 1] = rat_from_json(val);
  }
  return f;
}

Json density2_to_json(const Density2& f) {
  Json obj = Json::object();
  for (int i = 1; i <= f.n; ++i)
    for (int j = i; j <= f.n; ++j)
      obj["(" + std::to_string(i) + "," + std::to_string(j) + ")"] = rat_to_string(f(i, j));
  return Json{{"f2", obj}};
}

Density2 density2_from_json(const Json& j) {
  const Json& obj = object_field(j, "f2");
  int n = 0;
  while (n < 6 && std::size_t(pair_count(n)) != obj.size()) ++n;
  if (n < 1 || n > 5)
    throw ParseError("pair density entry count fits no n in 1..5");
  Density2 f{n, std::vector<Rat>(pair_count(n), Rat(0))};
  std::vector<bool> got(pair_count(n), false);
  for (const auto& [key, val] : obj.items()) {
    int i = 0, jj = 0;
    if (std::sscanf(key.c_str(), "(%d,%d)", &i, &jj) != 2)
      throw ParseError("bad pair key \"" + key + "\" (expected \"(i,j)\")");
    if (i < 1 || i > n || jj < 1 || jj > n)
      throw ParseError("pair key out of range: " + key);
    int idx = pair_index(n, i, jj);
    if (got[idx]) throw ParseError("pair " + key + " given twice");
    got[idx] = true;
    f.v[idx] = rat_from_json(val);
  }
  return f;
}

Json verdict_to_json(const FilterVerdict& v) {
  Json j{{"schema_version", 1},
         {"mode", mode_name(v.mode)},
         {"existential", v.existential},
         {"n", v.n},
         {"coevent", coevent_to_string(v.phi)},
         {"outcome", v.feasible ? "feasible" : "infeasible"},
         {"branches_explored", v.branches_explored}};
  Json trace = Json::array();
  for (const TraceStep& s : v.trace)
    trace.push_back(Json::array({s.lhs, s.rhs, std::string(1, s.rel)}));
  j["trace"] = trace;
  if (v.density1) j["density"] = density1_to_json(*v.density1);
  if (v.density2) j["density"] = density2_to_json(*v.density2);
  if (v.measure) j["measure"] = measure_to_json(*v.measure);
  return j;
}

FilterVerdict verdict_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("verdict document must be a JSON object");
  FilterVerdict v;
  if (!j.contains("mode") || !j.at("mode").is_string())
    throw ParseError("verdict needs a \"mode\"");
  v.mode = mode_from_name(j.at("mode").get<std::string>());
  v.n = n_from_json(j);
  if (!j.contains("coevent") || !j.at("coevent").is_string())
    throw ParseError("verdict needs a \"coevent\"");
  v.phi = parse_coevent(j.at("coevent").get<std::string>(), v.n);
  v.existential = j.value("existential", false);
  std::string outcome = j.value("outcome", "");
  if (outcome != "feasible" && outcome != "infeasible")
    throw ParseError("verdict \"outcome\" must be feasible or infeasible");
  v.feasible = outcome == "feasible";
  v.branches_explored = j.value("branches_explored", 0LL);
  if (j.contains("trace")) {
    for (const Json& step : j.at("trace")) {
      if (!step.is_array() || step.size() != 3)
        throw ParseError("trace steps are [lhs, rhs, rel] triples");
      std::string rel = step.at(2).get<std::string>();
      if (rel.size() != 1 || (rel[0] != '<' && rel[0] != '=' && rel[0] != '>'))
        throw ParseError("trace relation must be <, = or >");
      v.trace.push_back(
          TraceStep{step.at(0).get<std::string>(), step.at(1).get<std::string>(), rel[0]});
    }
  }
  if (j.contains("density")) {
    if (v.mode == Mode::gen1)
      v.density1 = density1_from_json(j.at("density"));
    else
      v.density2 = density2_from_json(j.at("density"));
  }
  if (j.contains("measure")) v.measure = measure_from_json(j.at("measure"));
  return v;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw ParseError("failed writing " + path);
}

}  // namespace qr
