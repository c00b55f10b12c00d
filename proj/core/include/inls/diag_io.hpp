#pragma once

#include "inls/evolve.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace inls {

/// Header: time,mass,energy,l2 plus one hs_<s> column per requested order.
std::string diagnostics_csv_header(const Diagnostics& d);
void write_diagnostics_csv(std::ostream& os, const Diagnostics& d);

/// Flat little-endian record: u64 dim, u64 points per axis, f64 extent per
/// axis, then per frame interleaved re/im f64 per node (row-major). A sidecar
/// JSON descriptor is written next to it as <path>.json.
void write_field_bin(const std::string& path,
                     const std::vector<std::pair<double, Field>>& frames);
std::vector<std::pair<double, Field>> read_field_bin(const std::string& path);

}  // namespace inls
