#pragma once

#include <string>

#include "fracwave/grid.hpp"

namespace fracwave {

// Binary field format "FWF1": magic bytes 'F','W','F','1', then u32 rank
// (time axis included), u32 dims[rank], f64 steps[rank], f64 t0, then the
// little-endian f64 payload in row-major order (time slowest).
ScalarField read_fwf(const std::string& path);
void write_fwf(const std::string& path, const ScalarField& field);

// CSV with header `t,x1[,x2],value`, one row per sample in row-major order.
ScalarField read_csv_field(const std::string& path);
void write_csv_field(const std::string& path, const ScalarField& field);

// Dispatch on extension: .fwf -> binary, .csv -> text.
ScalarField read_field(const std::string& path);
void write_field(const std::string& path, const ScalarField& field);

}  // namespace fracwave
