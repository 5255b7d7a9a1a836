// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubebrick/cubebrick.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitDomain = 2;
constexpr double kBenchLogMass = 1.3862943611198906;  // ln 4

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void raise(int code, std::string message) { throw CliError{code, std::move(message)}; }

// Volume, domain and aspect violations exit with 2, everything else with 1.
[[noreturn]] void raise_status(cb_status status, const std::string& where) {
  const int code = (status == CB_ERR_VOLUME_NOT_UNIT || status == CB_ERR_OUT_OF_DOMAIN ||
                    status == CB_ERR_NON_POSITIVE_LENGTH || status == CB_ERR_INVALID_ASPECT ||
                    status == CB_ERR_PRECISION_EXCEEDED)
                       ? kExitDomain
                       : kExitMalformed;
  std::string msg = where.empty() ? "" : where + ": ";
  msg += std::string(cb_status_name(status)) + ": " + cb_last_error();
  raise(code, msg);
}

void check(cb_status status, const std::string& where = "") {
  if (status != CB_OK) raise_status(status, where);
}

struct BrickDeleter {
  void operator()(cb_brick* b) const { cb_brick_destroy(b); }
};
using BrickPtr = std::unique_ptr<cb_brick, BrickDeleter>;

struct PiecesDeleter {
  void operator()(cb_pieces* p) const { cb_pieces_destroy(p); }
};
struct ReportDeleter {
  void operator()(cb_verify_report* r) const { cb_verify_destroy(r); }
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_double(std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_double(item);
    if (!v) raise(kExitMalformed, "cannot parse " + what + " entry '" + trim(item) + "'");
    out.push_back(*v);
  }
  if (out.empty()) raise(kExitMalformed, what + " is empty");
  return out;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

double round12(double v) { return std::stod(fmt12(v)); }

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(kExitMalformed, "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(kExitMalformed, "cannot open output file '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// Point files

struct PointFile {
  std::vector<double> lengths;            // empty when the file carries none
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> line;          // 1-based source line per row
};

PointFile read_csv(const std::string& text) {
  PointFile pf;
  std::stringstream ss(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(ss, raw)) {
    ++lineno;
    const std::string l = trim(raw);
    if (l.empty() || l.front() == '#') continue;
    std::vector<double> row;
    std::stringstream ls(l);
    std::string item;
    while (std::getline(ls, item, ',')) {
      const auto v = parse_double(item);
      if (!v) {
        raise(kExitMalformed,
              "line " + std::to_string(lineno) + ": cannot parse '" + trim(item) + "'");
      }
      row.push_back(*v);
    }
    pf.rows.push_back(std::move(row));
    pf.line.push_back(lineno);
  }
  return pf;
}

PointFile read_json(const std::string& text) {
  PointFile pf;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(kExitMalformed, std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) raise(kExitMalformed, "JSON input must be an object");
    if (doc.contains("lengths")) pf.lengths = doc.at("lengths").get<std::vector<double>>();
    if (!doc.contains("points")) raise(kExitMalformed, "JSON input has no \"points\" array");
    std::size_t idx = 0;
    for (const auto& p : doc.at("points")) {
      pf.rows.push_back(p.get<std::vector<double>>());
      pf.line.push_back(++idx);
    }
  } catch (const json::exception& e) {
    raise(kExitMalformed, std::string("malformed JSON: ") + e.what());
  }
  return pf;
}

std::string format_csv(const std::vector<std::vector<double>>& values,
                       const std::vector<std::vector<int64_t>>& labels) {
  std::ostringstream os;
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (std::size_t i = 0; i < values[r].size(); ++i) os << (i ? "," : "") << fmt12(values[r][i]);
    for (int64_t u : labels[r]) os << ',' << u;
    os << '\n';
  }
  return os.str();
}

std::string format_json(const std::vector<double>& lengths,
                        const std::vector<std::vector<double>>& values,
                        const std::vector<std::vector<int64_t>>& labels) {
  json doc;
  doc["lengths"] = json::array();
  for (double a : lengths) doc["lengths"].push_back(round12(a));
  doc["points"] = json::array();
  for (const auto& row : values) {
    json jr = json::array();
    for (double v : row) jr.push_back(round12(v));
    doc["points"].push_back(std::move(jr));
  }
  doc["labels"] = labels;
  return doc.dump(2) + "\n";
}

std::string infer_format(const std::string& format, const std::string& in_path) {
  if (!format.empty()) return format;
  if (in_path.size() >= 5 && in_path.substr(in_path.size() - 5) == ".json") return "json";
  return "csv";
}

struct MapOptions {
  std::string lengths;
  std::string in = "-";
  std::string out = "-";
  std::string format;
  bool normalize = false;
};

// Shared driver for map and invmap; `inverse` selects the direction.
int run_map(const MapOptions& opt, bool inverse) {
  const std::string format = infer_format(opt.format, opt.in);
  const std::string text = read_all(opt.in);
  PointFile pf = format == "json" ? read_json(text) : read_csv(text);

  std::vector<double> lengths =
      opt.lengths.empty() ? pf.lengths : parse_list(opt.lengths, "--lengths");
  if (lengths.empty()) raise(kExitMalformed, "no brick lengths given (use --lengths)");
  const std::size_t n = lengths.size();
  if (opt.normalize) check(cb_normalize_volume(lengths.data(), n, lengths.data()), "--lengths");

  cb_brick* raw = nullptr;
  check(cb_brick_create(lengths.data(), n, &raw), "--lengths");
  BrickPtr brick(raw);

  std::vector<std::vector<double>> values;
  std::vector<std::vector<int64_t>> labels;
  std::vector<double> sorted(n), result(n);
  std::vector<int64_t> u(n);
  for (std::size_t r = 0; r < pf.rows.size(); ++r) {
    const auto& row = pf.rows[r];
    const std::string where = "line " + std::to_string(pf.line[r]);
    if (row.size() != n) {
      raise(kExitMalformed, where + ": expected " + std::to_string(n) + " values, got " +
                                std::to_string(row.size()));
    }
    if (!inverse) {
      check(cb_brick_to_sorted_axes(brick.get(), row.data(), sorted.data()), where);
      check(cb_cube_to_brick(brick.get(), sorted.data(), nullptr, u.data(), nullptr,
                             result.data()),
            where);
    } else {
      check(cb_brick_to_cube(brick.get(), row.data(), sorted.data(), u.data()), where);
      check(cb_brick_to_user_axes(brick.get(), sorted.data(), result.data()), where);
    }
    values.push_back(result);
    labels.push_back(u);
  }

  write_all(opt.out, format == "json" ? format_json(lengths, values, labels)
                                      : format_csv(values, labels));
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_pieces(double a) {
  cb_pieces* raw = nullptr;
  check(cb_pieces_create(a, &raw), "--a");
  std::unique_ptr<cb_pieces, PiecesDeleter> pieces(raw);
  size_t bound = 0, loose = 0;
  check(cb_piece_count_bound(a, &bound, &loose), "--a");

  std::ostringstream os;
  const size_t count = cb_pieces_count(pieces.get());
  os << "aspect " << fmt12(a) << '\n'
     << "count " << count << '\n'
     << "bound " << bound << '\n'
     << "loose_bound " << loose << '\n';
  for (size_t i = 0; i < count; ++i) {
    int64_t u[2];
    check(cb_pieces_label(pieces.get(), i, u));
    const size_t nv = cb_pieces_vertex_count(pieces.get(), i);
    std::vector<double> xy(2 * nv);
    os << "piece " << i + 1 << " u=(" << u[0] << ',' << u[1] << ')';
    for (int side = 0; side < 2; ++side) {
      check(cb_pieces_vertices(pieces.get(), i, side, xy.data()));
      os << (side ? " square:" : " rect:");
      for (size_t v = 0; v < nv; ++v) {
        os << " (" << fmt12(xy[2 * v]) << ',' << fmt12(xy[2 * v + 1]) << ')';
      }
    }
    os << '\n';
  }
  std::cout << os.str();
  return kExitOk;
}

int run_svg(double a, const std::string& mode, const std::string& out) {
  cb_svg_mode m;
  if (mode == "rectangle") m = CB_SVG_RECTANGLE;
  else if (mode == "square") m = CB_SVG_SQUARE;
  else if (mode == "tiling") m = CB_SVG_TILING;
  else if (mode == "side-by-side") m = CB_SVG_SIDE_BY_SIDE;
  else raise(kExitMalformed, "unknown mode '" + mode + "'");

  char* svg = nullptr;
  check(cb_render_svg(a, m, &svg), "--a");
  std::string text(svg);
  cb_string_free(svg);
  write_all(out, text);
  return kExitOk;
}

int run_verify(size_t n, size_t trials, uint64_t seed, bool inject_fault) {
  cb_verify_report* raw = nullptr;
  check(cb_verify_run(n, trials, seed, inject_fault ? 1 : 0, &raw));
  std::unique_ptr<cb_verify_report, ReportDeleter> report(raw);
  std::cout << "verify n=" << n << " trials=" << trials << " seed=" << seed << '\n';
  bool all = true;
  for (size_t i = 0; i < cb_verify_suite_count(report.get()); ++i) {
    const bool ok = cb_verify_suite_passed(report.get(), i) != 0;
    all = all && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << cb_verify_suite_name(report.get(), i) << ": "
              << cb_verify_suite_detail(report.get(), i) << '\n';
  }
  return all ? kExitOk : kExitDomain;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
  std::string n_list = "256,512,1024,2048,4096,8192,16384,32768,65536,131072,262144,524288,1048576";
  size_t points = 64;
  uint64_t seed = 1;
  double min_time = 0.2;
};

// Least-squares slope of log(t) against log(n).
double loglog_slope(const std::vector<double>& n, const std::vector<double>& t) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x = std::log(n[i]);
    const double y = std::log(t[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int run_bench(const BenchOptions& opt) {
  std::vector<size_t> dims;
  {
    std::stringstream ss(opt.n_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      if (t.empty()) continue;
      size_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size() || v == 0) {
        raise(kExitMalformed, "cannot parse dimension '" + t + "'");
      }
      dims.push_back(v);
    }
  }
  if (dims.empty()) raise(kExitMalformed, "--n-list is empty");
  if (opt.points == 0) raise(kExitMalformed, "--points must be positive");

  using clock = std::chrono::steady_clock;
  std::vector<double> ns, times;
  std::cout << "n,points,ns_per_point\n";
  for (size_t n : dims) {
    std::vector<double> lengths(n);
    check(cb_random_unit_lengths(n, kBenchLogMass, opt.seed + n, lengths.data()));
    cb_brick* raw = nullptr;
    check(cb_brick_create(lengths.data(), n, &raw));
    BrickPtr brick(raw);

    // Keep the point pool within a few megabytes for large n.
    const size_t pool = std::clamp<size_t>((size_t{1} << 22) / n, 1, opt.points);
    std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ull * n));
    std::vector<double> xs(pool * n);
    for (double& v : xs) v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::vector<double> y(n), alpha(n), c(n);
    std::vector<int64_t> u(n);

    double best = INFINITY;
    double total = 0.0;
    for (int batch = 0; batch < 3 || total < opt.min_time; ++batch) {
      const auto t0 = clock::now();
      for (size_t p = 0; p < opt.points; ++p) {
        check(cb_cube_to_brick(brick.get(), xs.data() + (p % pool) * n, y.data(), u.data(),
                               alpha.data(), c.data()));
      }
      const double dt = std::chrono::duration<double>(clock::now() - t0).count();
      total += dt;
      best = std::min(best, dt / static_cast<double>(opt.points));
    }
    ns.push_back(static_cast<double>(n));
    times.push_back(best);
    std::cout << n << ',' << opt.points << ',' << fmt12(best * 1e9) << '\n';
    std::cout.flush();
  }
  if (dims.size() > 1) std::cout << "slope," << fmt12(loglog_slope(ns, times)) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cube-to-brick dissection: map points, list planar pieces, render figures"};
  app.require_subcommand(1);

  MapOptions map_opt;
  auto add_map_flags = [&](CLI::App* cmd) {
    cmd->add_option("--lengths", map_opt.lengths, "Brick side lengths, comma separated");
    cmd->add_option("--in", map_opt.in, "Input point file (CSV or JSON, '-' for stdin)");
    cmd->add_option("--out", map_opt.out, "Output file ('-' for stdout)");
    cmd->add_option("--format", map_opt.format, "Point file format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--normalize", map_opt.normalize, "Rescale lengths to unit volume");
  };
  auto* map_cmd = app.add_subcommand("map", "Map cube points to canonical brick points");
  add_map_flags(map_cmd);
  auto* inv_cmd = app.add_subcommand("invmap", "Map canonical brick points back to the cube");
  add_map_flags(inv_cmd);

  double aspect = 0.0;
  auto* pieces_cmd = app.add_subcommand("pieces", "List the pieces of the planar dissection");
  pieces_cmd->add_option("a,--a", aspect, "Rectangle aspect (long side), a >= 1")->required();

  std::string mode = "side-by-side";
  std::string svg_out = "-";
  auto* svg_cmd = app.add_subcommand("svg", "Render the planar dissection as SVG");
  svg_cmd->add_option("a,--a", aspect, "Rectangle aspect (long side), a >= 1")->required();
  svg_cmd->add_option("--mode", mode, "rectangle | square | tiling | side-by-side");
  svg_cmd->add_option("--out", svg_out, "Output file ('-' for stdout)");

  size_t verify_n = 3, verify_trials = 10000;
  uint64_t seed = 1;
  bool inject_fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in self-check suites");
  verify_cmd->add_option("--n", verify_n, "Dimension")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", verify_trials, "Random points per suite")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_flag("--inject-fault", inject_fault, "Perturb the map to exercise failure");

  BenchOptions bench_opt;
  auto* bench_cmd = app.add_subcommand("bench", "Time the map against the dimension (CSV)");
  bench_cmd->add_option("--n-list", bench_opt.n_list, "Dimensions, comma separated");
  bench_cmd->add_option("--points", bench_opt.points, "Points per batch and dimension");
  bench_cmd->add_option("--seed", bench_opt.seed, "Random seed");
  bench_cmd->add_option("--min-time", bench_opt.min_time, "Minimum seconds per dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*map_cmd) return run_map(map_opt, false);
    if (*inv_cmd) return run_map(map_opt, true);
    if (*pieces_cmd) return run_pieces(aspect);
    if (*svg_cmd) return run_svg(aspect, mode, svg_out);
    if (*verify_cmd) return run_verify(verify_n, verify_trials, seed, inject_fault);
    if (*bench_cmd) return run_bench(bench_opt);
  } catch (const CliError& e) {
    std::cerr << "cubebrick: " << e.message << '\n';
    return e.code;
  }
  return kExitMalformed;
}
