#pragma once
// Serialization: CSV tables and JSON-shaped report records. All floating
// point output goes through a fixed 17-significant-digit formatter so that
// deterministic runs produce byte-identical files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rieszpack/asymptotics.hpp"
#include "rieszpack/cantor.hpp"
#include "rieszpack/energy.hpp"
#include "rieszpack/equidist.hpp"
#include "rieszpack/minkowski.hpp"
#include "rieszpack/packing.hpp"

namespace rieszpack {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

// --- JSON helpers (reports are flat; hand-rolled writer keeps the float
// --- formatting under our control)

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string set_to_json(const CompactSet& set) {
  std::ostringstream os;
  os << "{\"kind\": \"" << set_kind_name(set.kind()) << "\"";
  switch (set.kind()) {
    case SetKind::interval:
      os << ", \"a\": " << format_double(set.a()) << ", \"b\": " << format_double(set.b());
      break;
    case SetKind::circle:
    case SetKind::sphere2:
      os << ", \"radius\": " << format_double(set.radius());
      break;
    case SetKind::cube:
      os << ", \"dim\": " << set.cube_dim();
      break;
    case SetKind::self_similar_1d: {
      const auto& ifs = set.ifs();
      os << ", \"p\": " << ifs.p << ", \"sigma\": \"" << ifs.sigma.str()
         << "\", \"translations\": [";
      for (int i = 0; i < ifs.p; ++i)
        os << (i ? ", " : "") << "\"" << ifs.translations[i].str() << "\"";
      os << "], \"depth\": " << set.depth() << ", \"lambda\": " << format_double(ifs.lambda);
      break;
    }
  }
  os << ", \"ambient_dim\": " << set.ambient_dim()
     << ", \"intrinsic_dim\": " << format_double(set.intrinsic_dim());
  if (set.hausdorff_measure())
    os << ", \"hausdorff_measure\": " << format_double(*set.hausdorff_measure());
  os << "}";
  return os.str();
}

inline std::string points_to_json(const std::vector<Point>& points) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t k = 0; k < points[i].size(); ++k)
      os << (k ? ", " : "") << format_double(points[i][k]);
    os << "]";
  }
  os << "]";
  return os.str();
}

inline std::string energy_report_to_json(const EnergyReport& report) {
  std::ostringstream os;
  os << "{\n  \"set\": " << set_to_json(report.config.set) << ",\n  \"N\": "
     << report.config.size() << ",\n  \"s\": " << format_double(report.s)
     << ",\n  \"energy\": " << format_double(report.energy)
     << ",\n  \"iterations\": " << report.iterations
     << ",\n  \"converged\": " << (report.converged ? "true" : "false")
     << ",\n  \"restarts_used\": " << report.restarts_used
     << ",\n  \"points\": " << points_to_json(report.config.points) << "\n}\n";
  return os.str();
}

inline std::string packing_method_name(PackingMethod m) {
  switch (m) {
    case PackingMethod::schedule: return "schedule";
    case PackingMethod::polish: return "polish";
    case PackingMethod::exact: return "exact";
  }
  return "?";
}

inline std::string packing_report_to_json(const PackingReport& report) {
  std::ostringstream os;
  os << "{\n  \"set\": " << set_to_json(report.config.set) << ",\n  \"N\": "
     << report.config.size() << ",\n  \"delta\": " << format_double(report.delta)
     << ",\n  \"method\": \"" << packing_method_name(report.method)
     << "\",\n  \"lower_bound_certified\": "
     << (report.lower_bound_certified ? "true" : "false")
     << ",\n  \"points\": " << points_to_json(report.config.points) << "\n}\n";
  return os.str();
}

inline std::string exact_packing_to_json(const ExactPacking& exact) {
  std::ostringstream os;
  os << "{\n  \"N\": " << exact.n << ",\n  \"delta\": \"" << exact.delta.str()
     << "\",\n  \"delta_value\": " << format_double(exact.delta.to_double())
     << ",\n  \"depth_used\": " << exact.depth_used << ",\n  \"witness\": [";
  for (std::size_t i = 0; i < exact.witness.size(); ++i)
    os << (i ? ", " : "") << "\"" << exact.witness[i].str() << "\"";
  os << "]\n}\n";
  return os.str();
}

// --- CSV writers

inline std::string sweep_to_csv(const AsymptoticsTable& table) {
  std::ostringstream os;
  os << "set,mode,s,d,N,raw,normalized,theory,rel_gap\n";
  const std::string set_name = set_kind_name(table.set.kind());
  const std::string mode = table.mode == SweepMode::energy ? "energy" : "packing";
  for (const auto& row : table.rows) {
    os << set_name << "," << mode << ","
       << (table.mode == SweepMode::energy ? format_double(table.s) : "") << ","
       << format_double(table.d_used) << "," << row.n << "," << format_double(row.raw) << ","
       << format_double(row.normalized) << ","
       << (row.theory ? format_double(*row.theory) : "") << ","
       << (row.rel_gap ? format_double(*row.rel_gap) : "") << "\n";
  }
  return os.str();
}

inline std::string sweep_to_plotdata(const AsymptoticsTable& table) {
  std::ostringstream os;
  os << "x,y,theory\n";
  for (const auto& row : table.rows)
    os << row.n << "," << format_double(row.normalized) << ","
       << (row.theory ? format_double(*row.theory) : "") << "\n";
  return os.str();
}

inline std::string content_to_csv(const ContentEstimate& est) {
  std::ostringstream os;
  os << "rho,volume,volume_stderr,normalized_value\n";
  for (std::size_t i = 0; i < est.rho_values.size(); ++i)
    os << format_double(est.rho_values[i]) << "," << format_double(est.volumes[i]) << ","
       << format_double(0.0) << "," << format_double(est.normalized[i]) << "\n";
  return os.str();
}

inline std::string oscillation_to_csv(const OscillationReport& report) {
  std::ostringstream os;
  os << "m,N,delta_num,delta_den,normalized_value,raw_normalized_value,subsequence_tag\n";
  auto emit = [&os](const OscillationRow& row, const char* tag) {
    os << row.m << "," << row.n << "," << row.delta.num << "," << row.delta.den << ","
       << format_double(row.limit_normalized) << "," << format_double(row.raw_normalized) << ","
       << tag << "\n";
  };
  for (const auto& row : report.along_kpm) emit(row, "kpm");
  for (const auto& row : report.along_cm) emit(row, "cm");
  return os.str();
}

inline std::string sandwich_to_csv(const SandwichReport& report) {
  std::ostringstream os;
  os << "check,measured,bound,direction,slack,pass\n";
  for (const auto& c : report.checks)
    os << c.name << "," << format_double(c.lhs) << "," << format_double(c.rhs) << ","
       << (c.is_lower_bound ? ">=" : "<=") << "," << format_double(c.slack) << ","
       << (c.pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

struct EquidistRecord {
  long long n = 0;
  std::string region_id;
  double fraction = 0.0;
  double measure_fraction = 0.0;
};

inline std::string equidist_to_csv(const std::vector<EquidistRecord>& records) {
  std::ostringstream os;
  os << "N,region,fraction,measure_fraction,deviation\n";
  for (const auto& r : records)
    os << r.n << "," << r.region_id << "," << format_double(r.fraction) << ","
       << format_double(r.measure_fraction) << ","
       << format_double(std::abs(r.fraction - r.measure_fraction)) << "\n";
  return os.str();
}

inline std::string root_limit_to_csv(const std::vector<std::pair<double, double>>& rows,
                                     const std::string& value_name) {
  std::ostringstream os;
  os << "s," << value_name << "\n";
  for (const auto& [s, v] : rows) os << format_double(s) << "," << format_double(v) << "\n";
  return os.str();
}

}  // namespace rieszpack
