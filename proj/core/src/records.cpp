#include "blaschke/records.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kParamHeader =
    "a_re,a_im,label,period,mult_re,mult_im,swapping,connectivity,iters,escape";

std::string fmt(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw IoError("csv: bad number '" + std::string(s) + "'");
  }
  return x;
}

int parse_int(std::string_view s) {
  int x = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw IoError("csv: bad integer '" + std::string(s) + "'");
  }
  return x;
}

bool parse_bool(std::string_view s) {
  if (s == "1") return true;
  if (s == "0") return false;
  throw IoError("csv: bad flag '" + std::string(s) + "'");
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
Grid<T> assemble(std::vector<T> cells, const std::vector<double>& ims) {
  Grid<T> grid;
  if (cells.empty()) return grid;
  std::size_t width = 1;
  while (width < ims.size() && ims[width] == ims[0]) ++width;
  if (cells.size() % width != 0) throw IoError("csv: row count is not a multiple of the grid width");
  grid.width = static_cast<int>(width);
  grid.height = static_cast<int>(cells.size() / width);
  grid.cells = std::move(cells);
  return grid;
}

// Strips a trailing '\r' and reports whether anything is left.
bool next_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }
Complex complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json cycle_json(const CycleRecord& c) {
  json pts = json::array();
  for (const Complex& z : c.points) pts.push_back(complex_json(z));
  json j{{"period", c.period},
         {"points", pts},
         {"multiplier", complex_json(c.multiplier)},
         {"kind", to_string(c.kind)},
         {"on_circle", c.on_circle},
         {"self_symmetric", c.self_symmetric},
         {"disk_pattern", c.disk_pattern}};
  j["half_period"] = c.half_period ? json(*c.half_period) : json(nullptr);
  return j;
}

CycleKind parse_kind(std::string_view s) {
  for (CycleKind k : {CycleKind::Attracting, CycleKind::ParabolicSuspect, CycleKind::Repelling}) {
    if (to_string(k) == s) return k;
  }
  throw IoError("json: unknown cycle kind '" + std::string(s) + "'");
}

CycleRecord cycle_from(const json& j) {
  CycleRecord c;
  c.period = j.at("period").get<int>();
  for (const json& p : j.at("points")) c.points.push_back(complex_from(p));
  c.multiplier = complex_from(j.at("multiplier"));
  c.kind = parse_kind(j.at("kind").get<std::string>());
  c.on_circle = j.at("on_circle").get<bool>();
  c.self_symmetric = j.at("self_symmetric").get<bool>();
  c.disk_pattern = j.at("disk_pattern").get<std::string>();
  if (!j.at("half_period").is_null()) c.half_period = j.at("half_period").get<int>();
  return c;
}

json optional_cycle(const std::optional<CycleRecord>& c) { return c ? cycle_json(*c) : json(nullptr); }

}  // namespace

GridRow summarize(const ParamClassRecord& record) {
  GridRow row;
  row.a = record.a;
  row.label = record.label;
  if (record.cycle_plus) {
    row.period = record.cycle_plus->period;
    row.multiplier = record.cycle_plus->multiplier;
  }
  row.swapping = record.swapping;
  row.connectivity = record.connectivity;
  row.iterations = record.iterations;
  row.escape = record.escape;
  return row;
}

RowGrid summarize(const ClassGrid& grid) {
  RowGrid out;
  out.width = grid.width;
  out.height = grid.height;
  out.cells.reserve(grid.cells.size());
  for (const ParamClassRecord& r : grid.cells) out.cells.push_back(summarize(r));
  return out;
}

void write_csv(std::ostream& os, const RowGrid& grid) {
  os << kParamHeader << '\n';
  for (const GridRow& r : grid.cells) {
    os << fmt(r.a.real()) << ',' << fmt(r.a.imag()) << ',' << to_string(r.label) << ',' << r.period << ','
       << fmt(r.multiplier.real()) << ',' << fmt(r.multiplier.imag()) << ',' << (r.swapping ? 1 : 0) << ','
       << to_string(r.connectivity) << ',' << r.iterations << ',' << to_string(r.escape) << '\n';
  }
}

void write_csv(std::ostream& os, const Grid<PolyPixel>& grid, PolyFamily family) {
  os << kParamHeader << ",family\n";
  for (const PolyPixel& px : grid.cells) {
    const EscapeTarget escape = px.tag == FateTag::EscapeInf ? EscapeTarget::Infinity
                                : px.zero_cycle             ? EscapeTarget::Zero
                                                            : EscapeTarget::None;
    os << fmt(px.parameter.real()) << ',' << fmt(px.parameter.imag()) << ',' << to_string(px.tag) << ','
       << px.period << ',' << fmt(px.multiplier.real()) << ',' << fmt(px.multiplier.imag()) << ",0,"
       << to_string(Connectivity::Unknown) << ',' << px.iterations << ',' << to_string(escape) << ','
       << to_string(family) << '\n';
  }
}

RowGrid read_param_csv(std::istream& is) {
  std::string line;
  if (!next_line(is, line) || line != kParamHeader) throw IoError("csv: missing or unexpected header");
  std::vector<GridRow> rows;
  std::vector<double> ims;
  while (next_line(is, line)) {
    const auto f = split(line);
    if (f.size() != 10) throw IoError("csv: expected 10 fields, got " + std::to_string(f.size()));
    GridRow r;
    r.a = {parse_double(f[0]), parse_double(f[1])};
    try {
      r.label = parse_label(f[2]);
      r.connectivity = parse_connectivity(f[7]);
      r.escape = parse_escape(f[9]);
    } catch (const DomainError& e) {
      throw IoError(std::string("csv: ") + e.what());
    }
    r.period = parse_int(f[3]);
    r.multiplier = {parse_double(f[4]), parse_double(f[5])};
    r.swapping = parse_bool(f[6]);
    r.iterations = parse_int(f[8]);
    ims.push_back(r.a.imag());
    rows.push_back(r);
  }
  return assemble(std::move(rows), ims);
}

Grid<PolyPixel> read_poly_csv(std::istream& is, PolyFamily* family) {
  std::string line;
  if (!next_line(is, line) || line != std::string(kParamHeader) + ",family") {
    throw IoError("csv: missing or unexpected header");
  }
  std::vector<PolyPixel> cells;
  std::vector<double> ims;
  while (next_line(is, line)) {
    const auto f = split(line);
    if (f.size() != 11) throw IoError("csv: expected 11 fields, got " + std::to_string(f.size()));
    PolyPixel px;
    px.parameter = {parse_double(f[0]), parse_double(f[1])};
    try {
      px.tag = parse_fate_tag(f[2]);
      px.zero_cycle = parse_escape(f[9]) == EscapeTarget::Zero;
      if (family) *family = parse_family(f[10]);
    } catch (const DomainError& e) {
      throw IoError(std::string("csv: ") + e.what());
    }
    px.period = parse_int(f[3]);
    px.multiplier = {parse_double(f[4]), parse_double(f[5])};
    px.iterations = parse_int(f[8]);
    ims.push_back(px.parameter.imag());
    cells.push_back(px);
  }
  return assemble(std::move(cells), ims);
}

std::string to_json(const ParamClassRecord& r) {
  json j{{"a", complex_json(r.a)},
         {"label", to_string(r.label)},
         {"period", r.cycle_plus ? r.cycle_plus->period : 0},
         {"multiplier", r.cycle_plus ? complex_json(r.cycle_plus->multiplier) : json(nullptr)},
         {"swapping", r.swapping},
         {"connectivity", to_string(r.connectivity)},
         {"escape", to_string(r.escape)},
         {"iterations", r.iterations},
         {"entered_disk", r.entered_disk},
         {"capture_suspect", r.capture_suspect},
         {"cycle_plus", optional_cycle(r.cycle_plus)},
         {"cycle_minus", optional_cycle(r.cycle_minus)}};
  return j.dump(2);
}

ParamClassRecord record_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ParamClassRecord r;
    r.a = complex_from(j.at("a"));
    r.label = parse_label(j.at("label").get<std::string>());
    r.swapping = j.at("swapping").get<bool>();
    r.connectivity = parse_connectivity(j.at("connectivity").get<std::string>());
    r.escape = parse_escape(j.at("escape").get<std::string>());
    r.iterations = j.at("iterations").get<int>();
    r.entered_disk = j.at("entered_disk").get<int>();
    r.capture_suspect = j.at("capture_suspect").get<bool>();
    if (!j.at("cycle_plus").is_null()) r.cycle_plus = cycle_from(j.at("cycle_plus"));
    if (!j.at("cycle_minus").is_null()) r.cycle_minus = cycle_from(j.at("cycle_minus"));
    return r;
  } catch (const json::exception& e) {
    throw IoError(std::string("json: ") + e.what());
  } catch (const DomainError& e) {
    throw IoError(std::string("json: ") + e.what());
  }
}

std::string to_json(const Fate& f) {
  json j{{"tag", to_string(f.tag)},
         {"iterations", f.iterations_used},
         {"entered_disk", f.entered_disk},
         {"left_disk", f.left_disk},
         {"cycle", optional_cycle(f.cycle)}};
  return j.dump(2);
}

std::string to_json(const SolveReport& r) {
  json j{{"a_star", complex_json(r.a_star)},
         {"target", complex_json(r.target)},
         {"achieved", complex_json(r.achieved)},
         {"residual", r.residual},
         {"steps", r.steps},
         {"jacobian_conditioning", r.jacobian_conditioning},
         {"period", r.period},
         {"converged", r.converged},
         {"orbit_residual", r.orbit_residual}};
  j["failure"] = r.failure.empty() ? json(nullptr) : json(r.failure);
  return j.dump(2);
}

std::string to_json(const CubicMatch& m) {
  json j{{"b_star", complex_json(m.b_star)},
         {"residual", m.residual},
         {"period", m.period},
         {"target", complex_json(m.target)},
         {"achieved", complex_json(m.achieved)},
         {"steps", m.steps}};
  return j.dump(2);
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  os.close();
  if (!os) throw IoError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  if (is.bad()) throw IoError("failed reading '" + path + "'");
  return ss.str();
}

FateTag parse_fate_tag(std::string_view name) {
  for (FateTag t : {FateTag::EscapeZero, FateTag::EscapeInf, FateTag::Cycle, FateTag::Undecided}) {
    if (to_string(t) == name) return t;
  }
  throw DomainError("unknown fate tag: " + std::string(name));
}

}  // namespace blaschke
