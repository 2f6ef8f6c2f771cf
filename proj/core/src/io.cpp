#include "fracwave/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "fracwave/errors.hpp"

namespace fracwave {
namespace {

template <typename T>
void write_raw(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::istream& is) {
  T v;
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw Error("FWF1: truncated file");
  return v;
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() &&
         s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

void write_fwf(const std::string& path, const ScalarField& field) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open for writing: " + path);
  os.write("FWF1", 4);
  const SpacetimeGrid& g = field.grid;
  const std::uint32_t rank = static_cast<std::uint32_t>(g.rank());
  write_raw(os, rank);
  write_raw(os, static_cast<std::uint32_t>(g.nt));
  for (int c : g.nx) write_raw(os, static_cast<std::uint32_t>(c));
  write_raw(os, g.dt);
  for (double s : g.dx) write_raw(os, s);
  write_raw(os, g.t0);
  os.write(reinterpret_cast<const char*>(field.values.data()),
           static_cast<std::streamsize>(field.values.size() * sizeof(double)));
  if (!os) throw Error("write failed: " + path);
}

ScalarField read_fwf(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "FWF1", 4) != 0)
    throw Error("not an FWF1 file: " + path);
  const std::uint32_t rank = read_raw<std::uint32_t>(is);
  if (rank < 2 || rank > 3) throw Error("FWF1: unsupported rank");
  const int nt = static_cast<int>(read_raw<std::uint32_t>(is));
  std::vector<int> nx;
  for (std::uint32_t a = 1; a < rank; ++a)
    nx.push_back(static_cast<int>(read_raw<std::uint32_t>(is)));
  const double dt = read_raw<double>(is);
  std::vector<double> dx;
  for (std::uint32_t a = 1; a < rank; ++a) dx.push_back(read_raw<double>(is));
  const double t0 = read_raw<double>(is);
  ScalarField field(SpacetimeGrid(nt, nx, dt, dx, t0));
  is.read(reinterpret_cast<char*>(field.values.data()),
          static_cast<std::streamsize>(field.values.size() * sizeof(double)));
  if (!is) throw Error("FWF1: truncated payload: " + path);
  field.check_finite();
  return field;
}

void write_csv_field(const std::string& path, const ScalarField& field) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open for writing: " + path);
  const SpacetimeGrid& g = field.grid;
  os << (g.spatial_rank() == 2 ? "t,x1,x2,value\n" : "t,x1,value\n");
  os.precision(17);
  std::size_t idx = 0;
  for (int it = 0; it < g.nt; ++it)
    for (int j = 0; j < g.nx[0]; ++j) {
      if (g.spatial_rank() == 2) {
        for (int k = 0; k < g.nx[1]; ++k)
          os << g.time_at(it) << ',' << g.x_at(0, j) << ',' << g.x_at(1, k)
             << ',' << field.values[idx++] << '\n';
      } else {
        os << g.time_at(it) << ',' << g.x_at(0, j) << ','
           << field.values[idx++] << '\n';
      }
    }
  if (!os) throw Error("write failed: " + path);
}

ScalarField read_csv_field(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open: " + path);
  std::string header;
  if (!std::getline(is, header)) throw Error("CSV: empty file: " + path);
  int srank;
  if (header == "t,x1,value")
    srank = 1;
  else if (header == "t,x1,x2,value")
    srank = 2;
  else
    throw Error("CSV: unrecognized header: " + header);

  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::vector<double> row;
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (static_cast<int>(row.size()) != srank + 2)
      throw Error("CSV: bad column count in: " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("CSV: no data rows: " + path);

  // Recover the grid from the sorted unique coordinates per axis.
  auto axis_values = [&](int col) {
    std::vector<double> vals;
    for (const auto& r : rows) {
      bool seen = false;
      for (double v : vals)
        if (std::abs(v - r[col]) < 1e-12) { seen = true; break; }
      if (!seen) vals.push_back(r[col]);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
  };
  std::vector<double> ts = axis_values(0);
  std::vector<double> x1 = axis_values(1);
  std::vector<double> x2 = srank == 2 ? axis_values(2) : std::vector<double>{};
  if (ts.size() < 2 || x1.size() < 2)
    throw Error("CSV: degenerate grid: " + path);
  const double dt = ts[1] - ts[0];
  std::vector<int> nx{static_cast<int>(x1.size())};
  std::vector<double> dx{x1[1] - x1[0]};
  if (srank == 2) {
    nx.push_back(static_cast<int>(x2.size()));
    dx.push_back(x2[1] - x2[0]);
  }
  ScalarField field(
      SpacetimeGrid(static_cast<int>(ts.size()), nx, dt, dx, ts[0]));
  if (rows.size() != field.values.size())
    throw Error("CSV: row count does not fill the grid: " + path);
  auto index_of = [](const std::vector<double>& axis, double v) {
    for (std::size_t i = 0; i < axis.size(); ++i)
      if (std::abs(axis[i] - v) < 1e-9) return static_cast<int>(i);
    throw Error("CSV: sample off the inferred grid");
  };
  for (const auto& r : rows) {
    const int it = index_of(ts, r[0]);
    const int j = index_of(x1, r[1]);
    if (srank == 2) {
      const int k = index_of(x2, r[2]);
      field.at(it, j, k) = r[3];
    } else {
      field.at(it, j) = r[2];
    }
  }
  field.check_finite();
  return field;
}

ScalarField read_field(const std::string& path) {
  if (ends_with(path, ".csv")) return read_csv_field(path);
  return read_fwf(path);
}

void write_field(const std::string& path, const ScalarField& field) {
  if (ends_with(path, ".csv")) return write_csv_field(path, field);
  write_fwf(path, field);
}

}  // namespace fracwave
