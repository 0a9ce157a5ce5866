#pragma once

// Serialization: a Field or LineFunction is stored as <base>.json (header
// {Lx, Nx, Ly, Ny, kind, space}) plus <base>.bin (flat little-endian f64
// pairs re,im; fields are row-major ix*Ny+iy, lines are ix).

#include <string>

#include "tdk/spectral.hpp"

namespace tdk::io {

void save_field(const Field& f, const std::string& base);
Field load_field(const std::string& base);

void save_line(const LineFunction& f, const std::string& base);
LineFunction load_line(const std::string& base);

}  // namespace tdk::io
