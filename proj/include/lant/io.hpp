#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lant/core.hpp"
#include "lant/inversion.hpp"
#include "lant/numtheory.hpp"
#include "lant/regression.hpp"

// Text formats for the CLI. All floating output uses 15 significant
// digits so identical inputs produce byte-identical files.
namespace lant::io {

/// "%.15g" formatting used for every floating value we emit.
std::string format_double(double v);

/// CSV dump: header "row,q_1,...,q_m" with the candidate values as column
/// labels, then one dense integer line per row 1..n.
void write_matrix_csv(std::ostream& out, const FactorizationMatrix& f);

/// Parses the CSV produced by write_matrix_csv back into a matrix.
FactorizationMatrix read_matrix_csv(std::istream& in);

/// Matrix as a JSON object with the candidate vector and dense rows.
void write_matrix_json(std::ostream& out, const FactorizationMatrix& f);

/// Inverse dump, same CSV layout with columns labelled 1..n.
void write_inverse_csv(std::ostream& out, const IntegerTriangularMatrix& m);
void write_inverse_json(std::ostream& out, const IntegerTriangularMatrix& m);

/// Estimator output with the consistency fields inline.
void write_lpe_json(std::ostream& out, const LpeResult& result, const ConsistencyReport& report);

/// {"fn": ..., "x": ..., "value": ..., "path": ..., "error_estimate": ...};
/// value is null for an indeterminate primality query.
void write_ntf_json(std::ostream& out, std::string_view fn, double x, const NtfValue& value);
void write_primality_json(std::ostream& out, double x, Primality p, NtfPath path);

/// {"re": ..., "im": ..., "err": ...}
void write_zeta_json(std::ostream& out, const ZetaValue& value);

/// CSV "n,ld,li,ratio", one line per sample.
void write_scan_csv(std::ostream& out, const std::vector<ConjectureSample>& samples);
void write_scan_json(std::ostream& out, const std::vector<ConjectureSample>& samples);

}  // namespace lant::io
