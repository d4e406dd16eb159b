#pragma once

#include <string>

#include "latq/matrix.hpp"
#include "latq/sivp.hpp"

namespace latq {

// Shortest decimal representation that parses back to the same double.
std::string fmt_double(double x);

// JSON matrix format: {"domain": "R"|"C"|"H", "rows": N, "cols": K,
// "data": row-major array of [c1, c2, c3, c4]}.  Round-trips bit-exactly.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

// CSV variant: header line "# domain=<R|C|H> rows=<N> cols=<K>", then one
// line per row with D_r comma-separated numbers per entry.
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

Matrix read_matrix_file(const std::string& path);  // by extension (.json/.csv)
void write_matrix_file(const std::string& path, const Matrix& m);

std::string smp_result_to_json(const SmpResult& res, RingId ring);

}  // namespace latq
