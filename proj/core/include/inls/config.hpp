#pragma once

#include "inls/grid.hpp"
#include "inls/params.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace inls {

/// Run configuration assembled from an INI-style key-value file with the
/// sections [params], [grid], [run] and [output]; unknown keys are errors.
struct RunConfig {
  ParamSet params;

  struct GridSection {
    int dim = 1;
    double extent = 100.0;
    std::size_t points = 512;
  } grid;

  struct RunSection {
    double T = 1.0;
    double dt = 1e-3;
    int sample_every = 10;
    double amplitude_ceiling = 1e6;
  } run;

  struct OutputSection {
    std::string dir = ".";
    std::vector<std::string> formats{"csv"};
  } output;

  std::uint64_t seed = 0;

  Grid make_grid_from_config() const { return inls::make_grid(grid.dim, grid.extent, grid.points); }
};

RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);

}  // namespace inls
