#pragma once

#include <string>

#include "lfim/contour.hpp"

namespace lfim {

// ContourTable serialization: a CSV with header theta_1,...,theta_p,delta,pi
// plus a JSON sidecar carrying the metadata and grid axes. Doubles print with
// 17 significant digits so the round trip is bit-exact.

std::string contour_csv(const ContourTable& table);
std::string contour_meta_json(const ContourTable& table);

// "<x>.csv" -> "<x>.meta.json"; other extensions get ".meta.json" appended.
std::string sidecar_path_for(const std::string& csv_path);

void write_contour(const ContourTable& table, const std::string& csv_path);
ContourTable read_contour(const std::string& csv_path);
ContourTable read_contour(const std::string& csv_path, const std::string& meta_path);

// Exact-round-trip formatting used by all writers ("%.17g").
std::string format_double(double x);

}  // namespace lfim
