// trikite command line: reproducible billiard-complexity experiments on top of
// the shared library's C interface. Every subcommand writes one JSON artifact
// (named by content hash) into the cache directory and updates latest.json.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trikite/trikite.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr uint64_t kDefaultSeed = 20250614;

// Exit codes: 0 ok, 1 domain error, 2 usage, 3 verification counterexample.
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail_domain(tk_status status) {
  throw CliError{kExitDomain,
                 std::string(tk_status_name(status)) + ": " + tk_last_error()};
}

void check(tk_status status) {
  if (status != TK_OK) fail_domain(status);
}

/// Angles parse as plain radians or rational multiples of pi: "1/3pi",
/// "0.25pi", "pi". The rational form keeps rational-angle runs exactly
/// specified.
double parse_angle(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  double factor = 1.0;
  bool has_pi = false;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    has_pi = true;
    s = s.substr(0, s.size() - 2);
  }
  double value;
  if (s.empty() && has_pi) {
    value = 1.0;
  } else if (auto slash = s.find('/'); slash != std::string::npos) {
    double num = std::stod(s.substr(0, slash));
    double den = std::stod(s.substr(slash + 1));
    if (den == 0) throw CliError{kExitUsage, "zero denominator in angle '" + text + "'"};
    value = num / den;
  } else {
    try {
      value = std::stod(s);
    } catch (const std::exception&) {
      throw CliError{kExitUsage, "cannot parse angle '" + text + "'"};
    }
  }
  return value * (has_pi ? 3.141592653589793238462643 : factor);
}

struct ShapeOptions {
  std::string alpha = "1/3pi";
  std::string beta = "1/3pi";
  std::string delta = "0.05";

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "alpha angle (radians or p/q pi)");
    cmd->add_option("--beta", beta, "beta angle (radians or p/q pi)");
    cmd->add_option("--delta", delta, "admissibility margin");
  }

  tk_shape* create() const {
    tk_shape* shape = nullptr;
    check(tk_shape_create(parse_angle(alpha), parse_angle(beta), parse_angle(delta), &shape));
    return shape;
  }
};

std::string default_cache_dir() {
  if (const char* env = std::getenv("TRIKITE_CACHE_DIR"); env && *env) return env;
  return "trikite-cache";
}

std::string iso_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{kExitDomain, "cannot write " + tmp.string()};
    out << content;
  }
  fs::rename(tmp, path);
}

/// Takes ownership of a library string.
std::string adopt(char* s) {
  std::string out = s ? s : "";
  tk_string_free(s);
  return out;
}

struct Emitter {
  std::string cache_dir;
  std::string format = "text";  // text | json | csv

  /// Wraps the body with run metadata, stores it under a content-hash name,
  /// updates latest.json and emits the requested stdout view.
  fs::path emit(const std::string& subcommand, json body, const std::string& summary) {
    fs::create_directories(cache_dir);
    std::string body_text = body.dump(2);
    std::string name = subcommand + "-" + hex64(fnv1a(body_text)) + ".json";
    body["metadata"] = json{{"created_at", iso_now()}};
    fs::path path = fs::path(cache_dir) / name;
    write_atomic(path, body.dump(2) + "\n");

    // Sibling CSV for tables that have one.
    if (body.contains("csv"))
      write_atomic(fs::path(cache_dir) / (name.substr(0, name.size() - 5) + ".csv"),
                   body["csv"].get<std::string>());

    fs::path index = fs::path(cache_dir) / "latest.json";
    json idx = json::object();
    if (fs::exists(index)) {
      std::ifstream in(index);
      try {
        idx = json::parse(in);
      } catch (const std::exception&) {
        idx = json::object();
      }
    }
    idx[subcommand] = name;
    write_atomic(index, idx.dump(2) + "\n");

    if (format == "json") {
      std::cout << body.dump(2) << "\n";
    } else if (format == "csv" && body.contains("csv")) {
      std::cout << body["csv"].get<std::string>();
    } else {
      std::cout << summary;
      std::cout << "artifact: " << path.string() << "\n";
    }
    return path;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"triangle billiard complexity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string cache_dir = default_cache_dir();
  std::string format = "text";
  int threads = 1;
  app.add_option("--cache-dir", cache_dir,
                 "artifact and enumeration cache directory (env TRIKITE_CACHE_DIR)");
  app.add_option("--format", format, "stdout view: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", threads, "worker threads for independent subtasks")
      ->check(CLI::Range(1, 64));

  tk_precision prec;
  tk_precision_default(&prec);
  int exit_code = 0;

  // enumerate ------------------------------------------------------------------
  auto* c_enum = app.add_subcommand("enumerate", "enumerate generalized diagonals");
  ShapeOptions enum_shape;
  enum_shape.attach(c_enum);
  int enum_n_max = 8;
  bool with_oracle = false;
  c_enum->add_option("--n-max", enum_n_max, "maximum discrete length");
  c_enum->add_flag("--with-oracle", with_oracle,
                   "cross-check against the unpruned brute-force oracle (n_max <= 12)");
  c_enum->callback([&] {
    tk_shape* shape = enum_shape.create();
    char* out = nullptr;
    tk_status st = tk_run_enumerate(shape, enum_n_max, &prec, with_oracle ? 1 : 0,
                                    cache_dir.c_str(), threads, &out);
    tk_shape_destroy(shape);
    check(st);
    json body = json::parse(adopt(out));
    std::string summary;
    auto p_n = body["table_global"]["counts"].back().get<uint64_t>();
    summary += "P_" + std::to_string(enum_n_max) + " = " + std::to_string(p_n) +
               " (undirected, all vertices)\n";
    if (with_oracle) {
      bool equal = body["oracle"]["all_equal"].get<bool>();
      summary += std::string("oracle comparison: ") + (equal ? "equal" : "MISMATCH") +
                 ", max direction gap " +
                 fmt(body["oracle"]["max_direction_gap"].get<double>()) + "\n";
      if (!equal) exit_code = kExitCounterexample;
    }
    Emitter{cache_dir, format}.emit("enumerate", body, summary);
  });

  // partitions ------------------------------------------------------------------
  auto* c_part = app.add_subcommand("partitions", "build the indexed partition sequence");
  ShapeOptions part_shape;
  part_shape.attach(c_part);
  int part_n_max = 8, part_vertex = 0;
  c_part->add_option("--n-max", part_n_max, "maximum index");
  c_part->add_option("--vertex", part_vertex, "vertex id (0, 1, 2)")->check(CLI::Range(0, 2));
  c_part->callback([&] {
    tk_shape* shape = part_shape.create();
    char* out = nullptr;
    tk_status st =
        tk_run_partitions(shape, part_n_max, part_vertex, &prec, cache_dir.c_str(), &out);
    tk_shape_destroy(shape);
    check(st);
    json body = json::parse(adopt(out));
    bool ok = body["audit"]["property1_ok"].get<bool>();
    std::string summary = std::to_string(body["point_count"].get<size_t>()) +
                          " cutting points; property (1) " + (ok ? "holds" : "VIOLATED") + "\n";
    if (!ok) exit_code = kExitCounterexample;
    Emitter{cache_dir, format}.emit("partitions", body, summary);
  });

  // good-triples -----------------------------------------------------------------
  auto* c_good = app.add_subcommand("good-triples", "find good-position triples");
  ShapeOptions good_shape;
  good_shape.attach(c_good);
  int good_n_max = 8, good_vertex = 0, good_lo = 1, good_hi = 0;
  bool with_lemma22 = false;
  std::vector<int> fixture_cs{4, 5};
  uint64_t good_seed = kDefaultSeed;
  c_good->add_option("--n-max", good_n_max, "maximum index");
  c_good->add_option("--vertex", good_vertex, "vertex id")->check(CLI::Range(0, 2));
  c_good->add_option("--lo", good_lo, "lowest index in range");
  c_good->add_option("--hi", good_hi, "highest index in range (default n-max)");
  c_good->add_flag("--with-lemma22", with_lemma22,
                   "also run the close-triple search on fixtures and measured data");
  c_good->add_option("--fixture-c", fixture_cs, "fixture c values (c >= 4)");
  c_good->add_option("--seed", good_seed, "fixture seed");
  c_good->callback([&] {
    int hi = good_hi > 0 ? good_hi : good_n_max;
    tk_shape* shape = good_shape.create();
    char* out = nullptr;
    tk_status st = tk_run_good_triples(shape, good_n_max, good_vertex, good_lo, hi, &prec,
                                       cache_dir.c_str(), &out);
    if (st != TK_OK) {
      tk_shape_destroy(shape);
      fail_domain(st);
    }
    json body = json::parse(adopt(out));
    std::string summary =
        std::to_string(body["count"].get<size_t>()) + " good triples in index range [" +
        std::to_string(good_lo) + ", " + std::to_string(hi) + "]\n";
    if (body["recheck_failures"].get<size_t>() > 0) {
      summary += "independent recheck FAILED\n";
      exit_code = kExitCounterexample;
    }
    if (with_lemma22) {
      char* l22 = nullptr;
      tk_status st2 = tk_run_lemma22(shape, good_n_max, good_vertex, fixture_cs.data(),
                                     fixture_cs.size(), good_seed, &prec, cache_dir.c_str(),
                                     &l22);
      if (st2 != TK_OK) {
        tk_shape_destroy(shape);
        fail_domain(st2);
      }
      body["lemma22"] = json::parse(adopt(l22));
      int failed = body["lemma22"]["search_failed_count"].get<int>();
      summary += "close-triple search: " + std::to_string(failed) + " SearchFailed outcomes\n";
      if (failed > 0) exit_code = kExitCounterexample;
    }
    tk_shape_destroy(shape);
    Emitter{cache_dir, format}.emit("good-triples", body, summary);
  });

  // symbolic-check ----------------------------------------------------------------
  auto* c_sym = app.add_subcommand("symbolic-check",
                                   "symbolic unfolding against the numeric recurrence");
  size_t sym_count = 1000;
  int sym_kites = 12, sym_pairs = 5;
  uint64_t sym_seed = kDefaultSeed;
  c_sym->add_option("--count", sym_count, "random combinatorics to test");
  c_sym->add_option("--max-kites", sym_kites, "corridor length cap (kite copies)");
  c_sym->add_option("--pairs", sym_pairs, "random angle pairs per combinatorics");
  c_sym->add_option("--seed", sym_seed, "seed");
  c_sym->callback([&] {
    char* out = nullptr;
    check(tk_run_symbolic_check(sym_count, sym_kites, sym_pairs, sym_seed, &out));
    json body = json::parse(adopt(out));
    size_t dv = body["degree_violations"].get<size_t>();
    size_t fv = body["frequency_violations"].get<size_t>();
    double err = body["max_abs_error"].get<double>();
    std::string summary = "degree violations: " + std::to_string(dv) +
                          ", frequency violations: " + std::to_string(fv) +
                          ", max coordinate error: " + fmt(err) + "\n";
    if (dv + fv > 0 || err > 1e-9) exit_code = kExitCounterexample;
    Emitter{cache_dir, format}.emit("symbolic-check", body, summary);
  });

  // area-poly ----------------------------------------------------------------------
  auto* c_area = app.add_subcommand("area-poly", "area polynomial identities and good triples");
  ShapeOptions area_shape;
  area_shape.attach(c_area);
  size_t area_samples = 200;
  int area_moves = 7, area_pairs = 5, area_n_max = 8, area_vertex = 0;
  uint64_t area_seed = kDefaultSeed;
  c_area->add_option("--samples", area_samples, "random vertex triples");
  c_area->add_option("--max-moves", area_moves, "corridor move cap for random triples");
  c_area->add_option("--pairs", area_pairs, "random angle pairs per triple");
  c_area->add_option("--n-max", area_n_max, "enumeration depth for measured good triples");
  c_area->add_option("--vertex", area_vertex, "vertex id")->check(CLI::Range(0, 2));
  c_area->add_option("--seed", area_seed, "seed");
  c_area->callback([&] {
    tk_shape* shape = area_shape.create();
    char* out = nullptr;
    tk_status st = tk_run_area_poly(shape, area_n_max, area_vertex, area_samples, area_moves,
                                    area_pairs, area_seed, &prec, cache_dir.c_str(), &out);
    tk_shape_destroy(shape);
    check(st);
    json body = json::parse(adopt(out));
    size_t dv = body["degree_violations"].get<size_t>();
    double err = body["max_abs_error"].get<double>();
    const auto& good = body["good_triples"];
    std::string summary =
        "random triples: degree violations " + std::to_string(dv) + ", max area error " +
        fmt(err) + "\n" + "measured good triples: " +
        std::to_string(good["checked"].get<size_t>()) + " checked, min |A| = " +
        (good["min_abs_area"].is_null() ? std::string("n/a")
                                        : fmt(good["min_abs_area"].get<double>())) +
        "\n";
    bool bad = dv > 0 || err > 1e-9 || good["zero_polynomials"].get<size_t>() > 0 ||
               good["corridor_mismatches"].get<size_t>() > 0 ||
               good["numeric_mismatches"].get<size_t>() > 0;
    if (bad) exit_code = kExitCounterexample;
    Emitter{cache_dir, format}.emit("area-poly", body, summary);
  });

  // measure-decay --------------------------------------------------------------------
  auto* c_meas = app.add_subcommand("measure-decay", "sublevel-measure decay ladder");
  std::vector<int> degrees{4, 8, 16};
  double rate = 0.15, c_ref = 0.5;
  size_t family_size = 50;
  uint64_t meas_samples = 100000, meas_seed = kDefaultSeed;
  c_meas->add_option("--degrees", degrees, "degree ladder");
  c_meas->add_option("--rate", rate, "R in the threshold e^{-R m^2}");
  c_meas->add_option("--c-ref", c_ref, "reference decay rate for the e^{-c m} column");
  c_meas->add_option("--family-size", family_size, "polynomials per degree");
  c_meas->add_option("--samples", meas_samples, "Monte Carlo samples per polynomial");
  c_meas->add_option("--seed", meas_seed, "seed");
  c_meas->callback([&] {
    char* out = nullptr;
    check(tk_run_measure_decay(degrees.data(), degrees.size(), rate, c_ref, family_size,
                               meas_samples, meas_seed, threads, &out));
    json body = json::parse(adopt(out));
    std::string summary;
    for (const auto& row : body["rows"])
      summary += "m = " + std::to_string(row["m"].get<int>()) +
                 "  worst fraction = " + fmt(row["worst_fraction"].get<double>()) + "\n";
    summary += std::string("worst fraction nonincreasing: ") +
               (body["worst_fraction_nonincreasing"].get<bool>() ? "yes" : "NO") + "\n";
    Emitter{cache_dir, format}.emit("measure-decay", body, summary);
  });

  // constants -----------------------------------------------------------------------
  auto* c_const = app.add_subcommand("constants", "exponent system and its positive root");
  c_const->callback([&] {
    char* out = nullptr;
    check(tk_run_constants(&out));
    json body = json::parse(adopt(out));
    std::string summary = "mu_star = " + fmt(body["mu_star"].get<double>()) +
                          " (residual " + fmt(body["quadratic_residual"].get<double>()) + ")\n";
    Emitter{cache_dir, format}.emit("constants", body, summary);
  });

  // report --------------------------------------------------------------------------
  auto* c_rep = app.add_subcommand("report", "growth fit, gap sequence and bound comparison");
  ShapeOptions rep_shape;
  rep_shape.attach(c_rep);
  int rep_n_max = 40, fit_lo = 10, fit_hi = 40;
  double rep_mu = tk_mu_star() + 0.05, rep_eps = 0.05;
  c_rep->add_option("--n-max", rep_n_max, "enumeration depth");
  c_rep->add_option("--fit-lo", fit_lo, "growth fit range start");
  c_rep->add_option("--fit-hi", fit_hi, "growth fit range end");
  c_rep->add_option("--mu", rep_mu, "gap-sequence exponent");
  c_rep->add_option("--epsilon", rep_eps, "bound exponent offset");
  c_rep->callback([&] {
    tk_shape* shape = rep_shape.create();
    char* out = nullptr;
    tk_status st = tk_run_report(shape, rep_n_max, rep_mu, rep_eps, fit_lo, fit_hi, &prec,
                                 cache_dir.c_str(), threads, &out);
    tk_shape_destroy(shape);
    check(st);
    json body = json::parse(adopt(out));
    std::string summary;
    if (body["growth_fit"].contains("exponent"))
      summary += "growth exponent over [" + std::to_string(fit_lo) + ", " +
                 std::to_string(fit_hi) +
                 "]: " + fmt(body["growth_fit"]["exponent"].get<double>()) + "\n";
    summary +=
        "implied C = " + fmt(body["bound_report"]["implied_c"].get<double>()) + "\n";
    // The bound CSV is the artifact's csv sibling.
    json flat = body;
    flat["csv"] = body["bound_report"]["csv"];
    Emitter{cache_dir, format}.emit("report", flat, summary);
  });

  // verify-lemma21 ---------------------------------------------------------------------
  auto* c_l21 = app.add_subcommand("verify-lemma21",
                                   "exhaustive good-triple threshold check (abstract model)");
  int l21_c = 3;
  c_l21->add_option("--c", l21_c, "number of insertion steps")->check(CLI::Range(1, 3));
  c_l21->callback([&] {
    char* out = nullptr;
    check(tk_run_verify_lemma21(l21_c, &out));
    json body = json::parse(adopt(out));
    bool holds = body["holds"].get<bool>();
    std::string summary =
        "c = " + std::to_string(l21_c) + ": threshold " +
        std::to_string(body["seeded3"]["threshold"].get<int>()) + ", max triple-free " +
        std::to_string(body["seeded3"]["max_triple_free"].get<int>()) + " (seeded), " +
        std::to_string(body["from_empty"]["max_triple_free"].get<int>()) + " (from empty); " +
        (holds ? "holds" : "COUNTEREXAMPLE") + "\n";
    if (!holds) exit_code = kExitCounterexample;
    Emitter{cache_dir, format}.emit("verify-lemma21", body, summary);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
