#include "inls/diag_io.hpp"

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

namespace inls {

namespace {

static_assert(std::endian::native == std::endian::little,
              "binary field records assume a little-endian host");

std::string format_order(double s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

template <typename T>
void put(std::ostream& os, T value) {
  os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T take(std::istream& is) {
  T value{};
  is.read(reinterpret_cast<char*>(&value), sizeof(T));
  return value;
}

}  // namespace

std::string diagnostics_csv_header(const Diagnostics& d) {
  std::string header = "time,mass,energy,l2";
  for (double s : d.hs_orders) header += ",hs_" + format_order(s);
  return header;
}

void write_diagnostics_csv(std::ostream& os, const Diagnostics& d) {
  os << diagnostics_csv_header(d) << '\n';
  os.precision(17);
  for (std::size_t i = 0; i < d.times.size(); ++i) {
    os << d.times[i] << ',' << d.mass_trace[i] << ',' << d.energy_trace[i] << ','
       << d.l2_trace[i];
    for (const auto& trace : d.hs_traces) os << ',' << trace[i];
    os << '\n';
  }
}

void write_field_bin(const std::string& path,
                     const std::vector<std::pair<double, Field>>& frames) {
  if (frames.empty()) throw std::invalid_argument("no frames to write");
  const Grid& g = frames.front().second.grid;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");

  put<std::uint64_t>(os, static_cast<std::uint64_t>(g.dim));
  for (int a = 0; a < g.dim; ++a) put<std::uint64_t>(os, g.points[a]);
  for (int a = 0; a < g.dim; ++a) put<double>(os, g.extent[a]);
  for (const auto& [t, field] : frames) {
    if (!(field.grid == g)) throw std::invalid_argument("frames on mismatched grids");
    for (const Complex& v : field.values) {
      put<double>(os, v.real());
      put<double>(os, v.imag());
    }
  }
  if (!os) throw std::runtime_error("write to '" + path + "' failed");

  nlohmann::ordered_json desc;
  desc["dim"] = g.dim;
  desc["points"] = std::vector<std::uint64_t>(g.points.begin(), g.points.begin() + g.dim);
  desc["extent"] = std::vector<double>(g.extent.begin(), g.extent.begin() + g.dim);
  desc["frames"] = frames.size();
  std::vector<double> times;
  for (const auto& [t, field] : frames) times.push_back(t);
  desc["times"] = times;
  desc["layout"] = "row-major, interleaved re/im f64 per node";
  desc["byte_order"] = "little-endian";
  std::ofstream ds(path + ".json");
  if (!ds) throw std::runtime_error("cannot open '" + path + ".json' for writing");
  ds << desc.dump(2) << '\n';
}

std::vector<std::pair<double, Field>> read_field_bin(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  std::ifstream ds(path + ".json");
  if (!ds) throw std::runtime_error("missing descriptor '" + path + ".json'");
  nlohmann::json desc = nlohmann::json::parse(ds);

  const auto dim = take<std::uint64_t>(is);
  std::vector<std::size_t> points(dim);
  for (auto& p : points) p = take<std::uint64_t>(is);
  std::vector<double> extent(dim);
  for (auto& e : extent) e = take<double>(is);
  Grid g = make_grid(static_cast<int>(dim), extent, points);

  const auto times = desc.at("times").get<std::vector<double>>();
  std::vector<std::pair<double, Field>> frames;
  for (double t : times) {
    Field f = Field::zeros(g);
    for (auto& v : f.values) {
      const double re = take<double>(is);
      const double im = take<double>(is);
      v = Complex(re, im);
    }
    if (!is) throw std::runtime_error("truncated field record in '" + path + "'");
    frames.emplace_back(t, std::move(f));
  }
  return frames;
}

}  // namespace inls
