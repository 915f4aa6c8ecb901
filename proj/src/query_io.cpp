#include "sphere_dubins/query_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace sphere_dubins {

namespace {

using Json = nlohmann::ordered_json;

std::string parse_location(const std::string& text, std::size_t byte)
{
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double read_number(const Json& node, const std::string& field)
{
  if (!node.is_number()) {
    throw MalformedInput("field '" + field + "': expected a number");
  }
  return node.get<double>();
}

Matrix3<double> read_matrix(const Json& node, const std::string& field)
{
  const std::string shape = "field '" + field + "': expected a 3x3 array of numbers (rows)";
  if (!node.is_array() || node.size() != 3) {
    throw MalformedInput(shape);
  }
  Matrix3<double> m;
  for (int i = 0; i < 3; ++i) {
    const Json& row = node[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3) {
      throw MalformedInput(shape);
    }
    for (int j = 0; j < 3; ++j) {
      m(i, j) = read_number(row[static_cast<std::size_t>(j)],
                            field + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return m;
}

SolverTolerances<double> read_tolerances(const Json& node)
{
  if (!node.is_object()) {
    throw MalformedInput("field 'tolerances': expected an object");
  }
  SolverTolerances<double> tol;
  for (const auto& [key, value] : node.items()) {
    if (key == "clamp_eps") {
      tol.clamp_eps = read_number(value, "tolerances.clamp_eps");
    } else if (key == "residual_tol") {
      tol.residual_tol = read_number(value, "tolerances.residual_tol");
    } else if (key == "degenerate_eps") {
      tol.degenerate_eps = read_number(value, "tolerances.degenerate_eps");
    } else {
      throw MalformedInput("field 'tolerances." + key + "': unknown field");
    }
  }
  return tol;
}

Json matrix_json(const Matrix3<double>& m)
{
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
  }
  return rows;
}

Json solution_json(const PathSolution<double>& s)
{
  Json out = Json::object();
  out["family"] = std::string(family_name(s.family));
  out["angles"] = Json::array({s.angles.phi1, s.angles.phi2, s.angles.phi3});
  out["length"] = s.length;
  out["residual"] = s.residual;
  return out;
}

bool is_flat(const Json& node)
{
  for (const Json& child : node) {
    if (child.is_structured()) {
      return false;
    }
  }
  return true;
}

void write_json(std::ostream& os, const Json& node, int depth)
{
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  if (node.is_number_float()) {
    os << format_double(node.get<double>());
  } else if (node.is_array()) {
    if (node.empty()) {
      os << "[]";
    } else if (is_flat(node)) {
      os << '[';
      for (std::size_t i = 0; i < node.size(); ++i) {
        os << (i ? ", " : "");
        write_json(os, node[i], depth + 1);
      }
      os << ']';
    } else {
      os << "[\n";
      for (std::size_t i = 0; i < node.size(); ++i) {
        os << pad;
        write_json(os, node[i], depth + 1);
        os << (i + 1 < node.size() ? ",\n" : "\n");
      }
      os << close_pad << ']';
    }
  } else if (node.is_object()) {
    if (node.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : node.items()) {
      os << pad << Json(key).dump() << ": ";
      write_json(os, value, depth + 1);
      os << (++i < node.size() ? ",\n" : "\n");
    }
    os << close_pad << '}';
  } else {
    os << node.dump();
  }
}

}  // namespace

std::string format_double(double value)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Matrix3<double> validate_rotation(const Matrix3<double>& m, const std::string& field)
{
  if (!m.allFinite()) {
    throw InvalidValue("field '" + field + "': matrix has non-finite entries");
  }
  if (is_rotation(m)) {
    return m;
  }
  const double drift = (m.transpose() * m - Matrix3<double>::Identity()).norm();
  if (drift <= kRepairLimit && m.determinant() > 0.0) {
    return project_to_rotation(m);
  }
  throw InvalidValue("field '" + field + "': not a rotation matrix (orthonormality error " + format_double(drift) +
                     ", determinant " + format_double(m.determinant()) + ")");
}

Query parse_query(const std::string& text, const QueryOverrides& overrides)
{
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput("invalid JSON at " + parse_location(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw MalformedInput("top level: expected a JSON object");
  }

  Query q;
  bool have_final = false;
  std::optional<double> r;
  for (const auto& [key, value] : doc.items()) {
    if (key == "initial") {
      q.initial = read_matrix(value, key);
    } else if (key == "final") {
      q.final_config = read_matrix(value, key);
      have_final = true;
    } else if (key == "r") {
      r = read_number(value, key);
    } else if (key == "tolerances") {
      q.tolerances = read_tolerances(value);
    } else if (key == "samples_per_segment") {
      if (!value.is_number_integer()) {
        throw MalformedInput("field 'samples_per_segment': expected an integer");
      }
      q.samples_per_segment = value.get<int>();
    } else {
      throw MalformedInput("field '" + key + "': unknown field");
    }
  }
  if (!have_final) {
    throw MalformedInput("field 'final': required field missing");
  }
  if (overrides.r) {
    r = overrides.r;
  }
  if (!r) {
    throw MalformedInput("field 'r': required field missing");
  }
  if (overrides.samples_per_segment) {
    q.samples_per_segment = *overrides.samples_per_segment;
  }
  if (overrides.residual_tol) {
    q.tolerances.residual_tol = *overrides.residual_tol;
  }

  try {
    q.r = TurningRadius<double>(*r).value();
  } catch (const std::domain_error&) {
    throw InvalidValue("field 'r': turning radius must lie in (0, 1), got " + format_double(*r));
  }
  try {
    q.tolerances.validate();
  } catch (const std::invalid_argument& e) {
    throw InvalidValue(std::string("field 'tolerances': ") + e.what());
  }
  if (q.samples_per_segment < 2) {
    throw InvalidValue("field 'samples_per_segment': need at least 2, got " + std::to_string(q.samples_per_segment));
  }
  q.initial = validate_rotation(q.initial, "initial");
  q.final_config = validate_rotation(q.final_config, "final");
  return q;
}

std::string format_report(const PlanReport<double>& report, const Query& query)
{
  Json doc = Json::object();
  doc["version"] = kVersion;

  Json echo = Json::object();
  echo["initial"] = matrix_json(query.initial);
  echo["final"] = matrix_json(query.final_config);
  echo["alpha"] = matrix_json(report.alpha);
  echo["r"] = report.r;
  echo["tolerances"] = Json::object({{"clamp_eps", report.tolerances.clamp_eps},
                                     {"residual_tol", report.tolerances.residual_tol},
                                     {"degenerate_eps", report.tolerances.degenerate_eps}});
  doc["query"] = std::move(echo);

  doc["best"] = report.best ? solution_json(*report.best) : Json(nullptr);
  Json candidates = Json::array();
  for (const PathSolution<double>& s : report.all_candidates) {
    candidates.push_back(solution_json(s));
  }
  doc["candidates"] = std::move(candidates);

  std::ostringstream os;
  write_json(os, doc, 0);
  os << '\n';
  return os.str();
}

std::vector<SampleRow> sample_rows(const PathSolution<double>& solution, const Configuration<double>& initial,
                                   int points_per_segment)
{
  if (points_per_segment < 2) {
    throw std::invalid_argument("sample_rows: need at least 2 points per segment");
  }
  std::vector<SampleRow> rows;
  if (solution.length == 0.0) {
    rows.push_back({0, 0.0, initial.col(0)});
    return rows;
  }

  Configuration<double> start = initial;
  double s0 = 0.0;
  int index = 0;
  for (const SegmentSlot& slot : segment_word(solution.family)) {
    const double phi = slot_angle(solution.angles, slot.angle_index);
    const double length = segment_length(slot.kind, solution.r, phi);
    const auto samples = sample_segment(start, slot.kind, solution.r, phi, points_per_segment);
    for (int k = index == 0 ? 0 : 1; k < points_per_segment; ++k) {
      const double s = s0 + length * static_cast<double>(k) / static_cast<double>(points_per_segment - 1);
      rows.push_back({index, s, samples[static_cast<std::size_t>(k)].col(0)});
    }
    start = samples.back();
    s0 += length;
    ++index;
  }
  return rows;
}

std::string format_samples_csv(const std::vector<SampleRow>& rows)
{
  std::ostringstream os;
  os << "segment_index,s,x,y,z\n";
  for (const SampleRow& row : rows) {
    os << row.segment_index << ',' << format_double(row.s) << ',' << format_double(row.position.x()) << ','
       << format_double(row.position.y()) << ',' << format_double(row.position.z()) << '\n';
  }
  return os.str();
}

}  // namespace sphere_dubins
