#include "lant/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lant::io {

namespace {

const char* path_name(NtfPath p) { return p == NtfPath::lant ? "lant" : "oracle"; }

void write_double_array(std::ostream& out, const Vector& v) {
  out << "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_double(v[i]);
  }
  out << "]";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void write_matrix_csv(std::ostream& out, const FactorizationMatrix& f) {
  out << "row";
  for (Index j = 0; j < f.q.size(); ++j) out << "," << f.q.values[j];
  out << "\n";
  for (Index r = 1; r <= f.n; ++r) {
    out << r;
    for (Index j = 1; j <= f.cols(); ++j) out << "," << f.entry(r, j);
    out << "\n";
  }
}

FactorizationMatrix read_matrix_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("matrix csv: missing header");
  const auto header = split_csv_line(line);
  if (header.empty() || header[0] != "row")
    throw std::invalid_argument("matrix csv: header must start with 'row'");
  const Index m = static_cast<Index>(header.size()) - 1;

  std::vector<std::vector<std::int64_t>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (static_cast<Index>(fields.size()) != m + 1)
      throw std::invalid_argument("matrix csv: ragged row");
    std::vector<std::int64_t> row(m);
    if (std::stoll(fields[0]) != static_cast<std::int64_t>(rows.size()) + 1)
      throw std::invalid_argument("matrix csv: rows must be numbered 1..n in order");
    for (Index j = 0; j < m; ++j) row[j] = std::stoll(fields[j + 1]);
    rows.push_back(std::move(row));
  }
  const Index n = static_cast<Index>(rows.size());
  Int64Vector q_values(m);
  for (Index j = 0; j < m; ++j) q_values[j] = std::stoll(header[j + 1]);

  FactorizationMatrix f;
  f.n = n;
  f.q = CandidatePrimeVector(n, std::move(q_values));
  f.columns.resize(m);
  for (Index j = 0; j < m; ++j) {
    f.columns[j].n = n;
    for (Index r = 0; r < n; ++r)
      if (rows[r][j] != 0) f.columns[j].entries.emplace_back(r + 1, rows[r][j]);
  }
  return f;
}

void write_matrix_json(std::ostream& out, const FactorizationMatrix& f) {
  out << "{\"n\": " << f.n << ", \"q\": [";
  for (Index j = 0; j < f.q.size(); ++j) {
    if (j > 0) out << ", ";
    out << f.q.values[j];
  }
  out << "], \"rows\": [";
  for (Index r = 1; r <= f.n; ++r) {
    if (r > 1) out << ", ";
    out << "[";
    for (Index j = 1; j <= f.cols(); ++j) {
      if (j > 1) out << ", ";
      out << f.entry(r, j);
    }
    out << "]";
  }
  out << "]}\n";
}

void write_inverse_csv(std::ostream& out, const IntegerTriangularMatrix& m) {
  out << "row";
  for (Index j = 1; j <= m.n; ++j) out << "," << j;
  out << "\n";
  for (Index r = 1; r <= m.n; ++r) {
    out << r;
    Index next = 0;
    const auto& row = m.rows[r - 1];
    for (Index j = 1; j <= m.n; ++j) {
      if (next < static_cast<Index>(row.size()) && row[next].first == j) {
        out << "," << row[next].second.str();
        ++next;
      } else {
        out << ",0";
      }
    }
    out << "\n";
  }
}

void write_inverse_json(std::ostream& out, const IntegerTriangularMatrix& m) {
  out << "{\"n\": " << m.n << ", \"rows\": [";
  for (Index r = 1; r <= m.n; ++r) {
    if (r > 1) out << ", ";
    out << "[";
    Index next = 0;
    const auto& row = m.rows[r - 1];
    for (Index j = 1; j <= m.n; ++j) {
      if (j > 1) out << ", ";
      if (next < static_cast<Index>(row.size()) && row[next].first == j) {
        out << row[next].second.str();
        ++next;
      } else {
        out << "0";
      }
    }
    out << "]";
  }
  out << "]}\n";
}

void write_lpe_json(std::ostream& out, const LpeResult& result, const ConsistencyReport& report) {
  out << "{\"n\": " << result.q.n << ", \"q\": [";
  for (Index j = 0; j < result.q.size(); ++j) {
    if (j > 0) out << ", ";
    out << result.q.values[j];
  }
  out << "], \"ln_q_hat\": ";
  write_double_array(out, result.ln_q_hat);
  out << ", \"ln_z_hat\": ";
  write_double_array(out, result.ln_z_hat);
  out << ", \"residuals\": ";
  write_double_array(out, result.residuals);
  out << ", \"rss\": " << format_double(result.rss);
  out << ", \"prediction_error\": " << format_double(result.prediction_error);
  out << ", \"estimation_error\": " << format_double(result.estimation_error);
  out << ", \"valid\": " << (report.valid ? "true" : "false");
  out << ", \"complete\": " << (report.complete ? "true" : "false");
  out << ", \"consistent\": " << (report.consistent ? "true" : "false");
  out << ", \"max_estimation_deviation\": " << format_double(report.max_estimation_deviation);
  out << ", \"max_prediction_deviation\": " << format_double(report.max_prediction_deviation);
  out << "}\n";
}

void write_ntf_json(std::ostream& out, std::string_view fn, double x, const NtfValue& value) {
  out << "{\"fn\": \"" << fn << "\", \"x\": " << format_double(x)
      << ", \"value\": " << format_double(value.value)
      << ", \"path\": \"" << path_name(value.path) << "\"";
  if (value.error_estimate)
    out << ", \"error_estimate\": " << format_double(*value.error_estimate);
  out << "}\n";
}

void write_primality_json(std::ostream& out, double x, Primality p, NtfPath path) {
  out << "{\"fn\": \"ip\", \"x\": " << format_double(x) << ", \"value\": ";
  if (p == Primality::indeterminate)
    out << "null";
  else
    out << (p == Primality::prime ? 1 : 0);
  out << ", \"path\": \"" << path_name(path) << "\"}\n";
}

void write_zeta_json(std::ostream& out, const ZetaValue& value) {
  out << "{\"re\": " << format_double(value.value.real())
      << ", \"im\": " << format_double(value.value.imag())
      << ", \"err\": " << format_double(value.error_estimate.value_or(0.0)) << "}\n";
}

void write_scan_csv(std::ostream& out, const std::vector<ConjectureSample>& samples) {
  out << "n,ld,li,ratio\n";
  for (const auto& s : samples)
    out << s.n << "," << format_double(s.ld) << "," << format_double(s.li) << ","
        << format_double(s.ratio) << "\n";
}

void write_scan_json(std::ostream& out, const std::vector<ConjectureSample>& samples) {
  out << "[";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i > 0) out << ", ";
    const auto& s = samples[i];
    out << "{\"n\": " << s.n << ", \"ld\": " << format_double(s.ld)
        << ", \"li\": " << format_double(s.li) << ", \"ratio\": " << format_double(s.ratio)
        << "}";
  }
  out << "]\n";
}

}  // namespace lant::io
