#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "raca/raca.hpp"

namespace raca::cli {

using Json = nlohmann::json;

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kMathFailure = 2, kInputError = 3, kResourceError = 4 };

inline constexpr const char* kNonCocompactCaveat =
    "caveat: the verdict assumes a non-compact fundamental polyhedron; this is not checked";

namespace detail {

struct Settings {
  bool json = false;
  int precision = 6;
  std::string reading = "share-no-endpoint";
};

inline std::string scientific(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2e", value);
  return buffer;
}

inline Condition3Reading parse_reading(const std::string& text) {
  if (text == "share-no-endpoint") return Condition3Reading::EdgesShareNoEndpoint;
  if (text == "distinct") return Condition3Reading::EdgesDistinct;
  throw InputError("unknown condition-3 reading '" + text + "' (expected share-no-endpoint or distinct)");
}

/// RACA_THREADS: worker count for the census; unset or 0 means one per core.
inline unsigned threads_from_environment() {
  const char* value = std::getenv("RACA_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  const int n = io::parse_count(value, "RACA_THREADS");
  if (n < 0) throw InputError("RACA_THREADS must be non-negative");
  return static_cast<unsigned>(n);
}

inline Json volume_json(const VolumeReport& r) {
  return Json{{"value", r.value}, {"formula", r.formula}, {"error_bound", r.abs_error_bound}};
}

inline void print_volume(std::ostream& out, const Settings& s, const VolumeReport& r) {
  if (s.json) {
    out << volume_json(r).dump(2) << '\n';
    return;
  }
  out << "value: " << io::fixed(r.value, s.precision) << '\n'
      << "formula: " << r.formula << '\n'
      << "error_bound: " << scientific(r.abs_error_bound) << '\n';
}

inline void print_bounds(std::ostream& out, const Settings& s, const std::string& kind, const BoundPair& b) {
  if (s.json) {
    out << Json{{"kind", kind}, {"lower", b.lower}, {"upper", b.upper}, {"lower_attained", b.lower_attained}}.dump(2)
        << '\n';
    return;
  }
  out << "kind: " << kind << '\n'
      << "lower: " << io::fixed(b.lower, s.precision) << '\n'
      << "upper: " << io::fixed(b.upper, s.precision) << '\n'
      << "lower_attained: " << (b.lower_attained ? "true" : "false") << '\n';
}

inline std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

inline Json face_vector_json(const std::map<int, int>& p) {
  Json out = Json::object();
  for (auto [size, count] : p) out[std::to_string(size)] = count;
  return out;
}

inline std::string face_vector_text(const std::map<int, int>& p) {
  std::string out;
  for (auto [size, count] : p) out += (out.empty() ? "" : " ") + ("p" + std::to_string(size)) + "=" + std::to_string(count);
  return out;
}

inline int check_andreev(std::ostream& out, const Settings& s, const std::string& path) {
  const auto result = andreev_check(io::load_polyhedron(path), parse_reading(s.reading));
  if (s.json) {
    Json violations = Json::array();
    for (const auto& v : result.violations)
      violations.push_back({{"condition", v.condition},
                            {"description", v.description},
                            {"witness_faces", v.witness_faces},
                            {"witness_edges", v.witness_edges}});
    Json structural = nullptr;
    if (result.structural_error)
      structural = {{"code", to_string(result.structural_error->code())}, {"message", result.structural_error->what()}};
    out << Json{{"passed", result.passed()},
                {"reading", to_string(result.reading)},
                {"structural_error", structural},
                {"violations", violations}}
               .dump(2)
        << '\n';
  } else if (result.structural_error) {
    out << "fail: structure: " << result.structural_error->what() << '\n';
  } else if (result.passed()) {
    out << "pass\n";
  } else {
    out << "fail\n";
    for (const auto& v : result.violations) {
      out << "condition " << v.condition << ": " << v.description;
      if (!v.witness_faces.empty()) out << "; faces " << join(v.witness_faces);
      if (!v.witness_edges.empty()) out << "; edges " << join(v.witness_edges);
      out << '\n';
    }
  }
  return result.passed() ? kSuccess : kMathFailure;
}

inline int check_stats(std::ostream& out, const Settings& s, const std::string& path) {
  const auto poly = io::load_polyhedron(path);
  PolyhedronStructure structure;
  try {
    structure = validate_structure(poly);
    require_degrees_3_or_4(structure);
  } catch (const ValidationError& e) {
    if (s.json)
      out << Json{{"valid", false}, {"code", to_string(e.code())}, {"message", e.what()}}.dump(2) << '\n';
    else
      out << "fail: structure: " << e.what() << '\n';
    return kMathFailure;
  }
  const auto profile = profile_of(structure);
  const auto stats = face_statistics(structure);
  const int euler = structure.vertex_count - profile.edges + profile.faces;
  if (s.json) {
    out << Json{{"valid", true},
                {"v_ideal", profile.v_ideal},
                {"v_finite", profile.v_finite},
                {"edges", profile.edges},
                {"faces", profile.faces},
                {"euler_characteristic", euler},
                {"face_vector", face_vector_json(stats.p)},
                {"W", stats.W},
                {"WI", stats.WI}}
               .dump(2)
        << '\n';
  } else {
    out << "V_inf: " << profile.v_ideal << '\n'
        << "V_f: " << profile.v_finite << '\n'
        << "E: " << profile.edges << '\n'
        << "F: " << profile.faces << '\n'
        << "euler_characteristic: " << euler << '\n'
        << "face_vector: " << face_vector_text(stats.p) << '\n'
        << "W: " << stats.W << '\n'
        << "WI: " << stats.WI << '\n';
  }
  return kSuccess;
}

inline Json census_type_json(const CensusType& t) {
  return Json{{"certificate", t.certificate},
              {"name", t.name},
              {"vertex_count", t.polyhedron.vertex_count()},
              {"faces", t.polyhedron.faces()},
              {"face_vector", face_vector_json(t.face_vector)},
              {"volume", t.volume ? volume_json(*t.volume) : Json(nullptr)},
              {"lower_bound", t.lower_bound ? Json(*t.lower_bound) : Json(nullptr)}};
}

inline Json census_record_json(const CensusRecord& r) {
  Json types = Json::array();
  for (const auto& t : r.realizable_types) types.push_back(census_type_json(t));
  return Json{{"pair", {{"v_ideal", r.pair.v_ideal}, {"v_finite", r.pair.v_finite}}},
              {"reading", to_string(r.reading)},
              {"polyhedral_types", r.polyhedral_types},
              {"realizable_types", types}};
}

inline void print_census_record(std::ostream& out, const Settings& s, const CensusRecord& r) {
  out << "pair (" << r.pair.v_ideal << "," << r.pair.v_finite << "): " << r.realizable_types.size()
      << " realizable of " << r.polyhedral_types << " polyhedral types [reading " << to_string(r.reading) << "]\n";
  for (const auto& t : r.realizable_types) {
    out << "  " << t.certificate << "  " << face_vector_text(t.face_vector);
    if (!t.name.empty()) out << "  " << t.name;
    if (t.volume) out << "  vol " << io::fixed(t.volume->value, s.precision);
    if (t.lower_bound) out << "  vol >= " << io::fixed(*t.lower_bound, s.precision);
    out << '\n';
  }
}

inline int census_enumerate(std::ostream& out, const Settings& s, int v_ideal, int v_finite) {
  EnumerationOptions options;
  options.threads = threads_from_environment();
  options.reading = parse_reading(s.reading);
  const auto record = enumerate_types({v_ideal, v_finite}, options);
  if (s.json)
    out << census_record_json(record).dump(2) << '\n';
  else
    print_census_record(out, s, record);
  return kSuccess;
}

inline int verify_theorem(std::ostream& out, const Settings& s) {
  EnumerationOptions options;
  options.threads = threads_from_environment();
  options.reading = parse_reading(s.reading);
  const auto report = verify_minimality(options);
  if (s.json) {
    Json branches = Json::array();
    for (const auto& b : report.branches)
      branches.push_back({{"branch", b.branch},
                          {"detail", b.detail},
                          {"value", b.value},
                          {"threshold", b.threshold},
                          {"holds", b.holds}});
    Json census = Json::array();
    for (const auto& r : report.census) census.push_back(census_record_json(r));
    out << Json{{"minimal_volume", report.minimal_volume},
                {"witness", report.witness},
                {"witness_name", report.witness_name},
                {"uniqueness", report.uniqueness},
                {"verified", report.verified},
                {"reading", to_string(report.reading)},
                {"branches", branches},
                {"census", census},
                {"failures", report.failures}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& b : report.branches)
      out << (b.holds ? "[ok]   " : "[FAIL] ") << b.branch << ": " << b.detail << " (value "
          << io::fixed(b.value, s.precision) << ", G " << io::fixed(b.threshold, s.precision) << ")\n";
    for (const auto& r : report.census) print_census_record(out, s, r);
    out << "minimal_volume: " << io::fixed(report.minimal_volume, s.precision) << '\n'
        << "witness: " << report.witness << " (" << report.witness_name << ")\n"
        << "uniqueness: " << (report.uniqueness ? "true" : "false") << '\n'
        << "verified: " << (report.verified ? "true" : "false") << '\n';
    for (const auto& f : report.failures) out << "failure: " << f << '\n';
  }
  return report.verified ? kSuccess : kMathFailure;
}

inline int arith_check(std::ostream& out, const Settings& s, const std::string& path, int max_len) {
  const auto gram = gram_from_coxeter(io::load_coxeter(path));
  if (max_len == 0) max_len = std::max(2, gram.size());
  const auto result = is_arithmetic_noncocompact(gram, max_len);
  if (s.json) {
    Json witness = nullptr;
    if (result.witness) witness = {{"cycle", result.witness->cycle}, {"product", result.witness->product.to_string()}};
    out << Json{{"arithmetic", result.arithmetic},
                {"cycles_checked", result.cycles_checked},
                {"max_len", max_len},
                {"witness", witness},
                {"caveat", kNonCocompactCaveat}}
               .dump(2)
        << '\n';
  } else {
    out << kNonCocompactCaveat << '\n'
        << "arithmetic: " << (result.arithmetic ? "true" : "false") << '\n'
        << "cycles_checked: " << result.cycles_checked << '\n';
    if (result.witness)
      out << "witness cycle: " << join(result.witness->cycle) << '\n'
          << "witness product: " << result.witness->product.to_string() << '\n';
  }
  return result.arithmetic ? kSuccess : kMathFailure;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Settings settings;
  CLI::App app{"Right-angled Coxeter polyhedra: volumes, realizability, census and arithmeticity", "raca"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", settings.json, "Emit JSON with sorted keys");
  app.add_option("--precision", settings.precision, "Decimals in plain-text output")->check(CLI::Range(0, 12));
  app.add_option("--reading", settings.reading, "Condition-3 reading: share-no-endpoint (default) or distinct");

  std::function<int()> action;

  std::string theta;
  auto* lob = app.add_subcommand("lob", "Lobachevsky function, 12 decimals");
  lob->add_option("theta", theta, "Angle: decimal or pi/<k>")->required();
  lob->callback([&] {
    action = [&] {
      const auto r = lobachevsky(io::parse_angle(theta));
      if (settings.json)
        out << Json{{"value", r.value}, {"formula", "clausen_series"}, {"error_bound", r.abs_error_bound}}.dump(2) << '\n';
      else
        out << io::fixed(r.value, 12) << '\n';
      return kSuccess;
    };
  });

  auto* volume = app.add_subcommand("volume", "Closed-form hyperbolic volumes");
  volume->require_subcommand(1);
  std::vector<std::string> angles;
  auto* ortho = volume->add_subcommand("orthoscheme", "Orthoscheme R(alpha, beta, gamma)");
  ortho->add_option("angles", angles, "alpha beta gamma")->required()->expected(3);
  ortho->callback([&] {
    action = [&] {
      detail::print_volume(out, settings,
                           orthoscheme_volume(io::parse_angle(angles[0]), io::parse_angle(angles[1]),
                                              io::parse_angle(angles[2])));
      return kSuccess;
    };
  });
  std::string family_n;
  auto* lobell = volume->add_subcommand("lobell", "Lobell polyhedron L_n");
  lobell->add_option("n", family_n)->required();
  lobell->callback([&] {
    action = [&] {
      detail::print_volume(out, settings, lobell_volume(io::parse_count(family_n, "n")));
      return kSuccess;
    };
  });
  auto* anti = volume->add_subcommand("antiprism", "Ideal antiprism A_n");
  anti->add_option("n", family_n)->required();
  anti->callback([&] {
    action = [&] {
      detail::print_volume(out, settings, antiprism_volume(io::parse_count(family_n, "n")));
      return kSuccess;
    };
  });
  std::string name;
  auto* named = volume->add_subcommand("named", "P32, P28, P34, Delta344, Delta444, DeltaPrime344, Lobell(n), Antiprism(n)");
  named->add_option("name", name)->required();
  named->callback([&] {
    action = [&] {
      detail::print_volume(out, settings, named_volume(name));
      return kSuccess;
    };
  });

  auto* bounds = app.add_subcommand("bounds", "Volume bounds from vertex counts");
  bounds->require_subcommand(1);
  std::vector<std::string> counts;
  auto* compact = bounds->add_subcommand("compact", "Compact polyhedron with V vertices");
  compact->add_option("V", counts)->required()->expected(1);
  compact->callback([&] {
    action = [&] {
      detail::print_bounds(out, settings, "compact", atkinson_bounds_compact(io::parse_count(counts[0], "V")));
      return kSuccess;
    };
  });
  auto* ideal = bounds->add_subcommand("ideal", "Ideal polyhedron with V vertices");
  ideal->add_option("V", counts)->required()->expected(1);
  ideal->callback([&] {
    action = [&] {
      detail::print_bounds(out, settings, "ideal", atkinson_bounds_ideal(io::parse_count(counts[0], "V")));
      return kSuccess;
    };
  });
  auto* mixed = bounds->add_subcommand("mixed", "V_inf ideal and V_f finite vertices");
  mixed->add_option("counts", counts, "V_inf V_f")->required()->expected(2);
  mixed->callback([&] {
    action = [&] {
      detail::print_bounds(out, settings, "mixed",
                           atkinson_bounds_mixed(io::parse_count(counts[0], "V_inf"), io::parse_count(counts[1], "V_f")));
      return kSuccess;
    };
  });

  auto* check = app.add_subcommand("check", "Validate a polyhedron file");
  check->require_subcommand(1);
  std::string path;
  auto* andreev = check->add_subcommand("andreev", "Right-angled realizability conditions");
  andreev->add_option("file", path)->required();
  andreev->callback([&] { action = [&] { return detail::check_andreev(out, settings, path); }; });
  auto* stats = check->add_subcommand("stats", "Vertex, edge and face statistics");
  stats->add_option("file", path)->required();
  stats->callback([&] { action = [&] { return detail::check_stats(out, settings, path); }; });

  auto* census = app.add_subcommand("census", "Enumerate combinatorial types");
  census->require_subcommand(1);
  int v_ideal = -1;
  int v_finite = -1;
  auto* enumerate = census->add_subcommand("enumerate", "Types with given vertex counts");
  enumerate->add_option("--videal", v_ideal, "Number of degree-4 vertices")->required();
  enumerate->add_option("--vfinite", v_finite, "Number of degree-3 vertices")->required();
  enumerate->callback([&] { action = [&] { return detail::census_enumerate(out, settings, v_ideal, v_finite); }; });
  auto* census_verify = census->add_subcommand("verify-theorem", "Check the minimal-volume theorem end to end");
  census_verify->callback([&] { action = [&] { return detail::verify_theorem(out, settings); }; });
  auto* verify = app.add_subcommand("verify-theorem", "Same as census verify-theorem");
  verify->callback([&] { action = [&] { return detail::verify_theorem(out, settings); }; });

  auto* arith = app.add_subcommand("arith", "Arithmeticity of non-cocompact reflection groups");
  arith->require_subcommand(1);
  int max_len = 0;
  auto* arith_check = arith->add_subcommand("check", "Cyclic products of the doubled Gram matrix");
  arith_check->add_option("file", path)->required();
  arith_check->add_option("--max-len", max_len, "Longest cycle to check (default: matrix size)")->check(CLI::Range(2, 64));
  arith_check->callback([&] { action = [&] { return detail::arith_check(out, settings, path, max_len); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kMathFailure;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResourceError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace raca::cli
