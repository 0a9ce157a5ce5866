#include "tdk/io.hpp"

#include <fstream>

#include <json.hpp>

#include "tdk/errors.hpp"

namespace tdk::io {

namespace {

using nlohmann::json;

void write_header(const GridSpec& g, const char* kind, Space space,
                  const std::string& base) {
  json h = {{"Lx", g.Lx},
            {"Nx", g.Nx},
            {"Ly", g.Ly},
            {"Ny", g.Ny},
            {"kind", kind},
            {"space", space == Space::physical ? "physical" : "spectral"}};
  std::ofstream out(base + ".json");
  if (!out) throw io_error("cannot write " + base + ".json");
  out << h.dump(2) << "\n";
}

json read_header(const std::string& base, const char* kind) {
  std::ifstream in(base + ".json");
  if (!in) throw io_error("cannot read " + base + ".json");
  json h = json::parse(in, nullptr, false);
  if (h.is_discarded()) throw io_error("malformed header " + base + ".json");
  if (h.value("kind", "") != kind)
    throw io_error("header kind mismatch in " + base + ".json");
  return h;
}

void write_values(const std::vector<cplx>& v, const std::string& base) {
  std::ofstream out(base + ".bin", std::ios::binary);
  if (!out) throw io_error("cannot write " + base + ".bin");
  for (const cplx& z : v) {
    double re = z.real(), im = z.imag();
    out.write(reinterpret_cast<const char*>(&re), sizeof(double));
    out.write(reinterpret_cast<const char*>(&im), sizeof(double));
  }
}

std::vector<cplx> read_values(const std::string& base, size_t n) {
  std::ifstream in(base + ".bin", std::ios::binary);
  if (!in) throw io_error("cannot read " + base + ".bin");
  std::vector<cplx> v(n);
  for (size_t i = 0; i < n; ++i) {
    double re = 0.0, im = 0.0;
    in.read(reinterpret_cast<char*>(&re), sizeof(double));
    in.read(reinterpret_cast<char*>(&im), sizeof(double));
    if (!in) throw io_error("truncated payload " + base + ".bin");
    v[i] = {re, im};
  }
  return v;
}

Space parse_space(const json& h) {
  return h.value("space", "physical") == std::string("spectral")
             ? Space::spectral
             : Space::physical;
}

}  // namespace

void save_field(const Field& f, const std::string& base) {
  write_header(f.g, "field", f.space, base);
  write_values(f.v, base);
}

Field load_field(const std::string& base) {
  json h = read_header(base, "field");
  GridSpec g = GridSpec::make(h.at("Lx"), h.at("Nx"), h.at("Ly"), h.at("Ny"));
  Field f;
  f.g = g;
  f.space = parse_space(h);
  f.v = read_values(base, static_cast<size_t>(g.Nx) * g.Ny);
  return f;
}

void save_line(const LineFunction& f, const std::string& base) {
  write_header(f.g, "line", f.space, base);
  write_values(f.v, base);
}

LineFunction load_line(const std::string& base) {
  json h = read_header(base, "line");
  GridSpec g = GridSpec::make(h.at("Lx"), h.at("Nx"), h.at("Ly"), h.at("Ny"));
  LineFunction f;
  f.g = g;
  f.space = parse_space(h);
  f.v = read_values(base, g.Nx);
  return f;
}

}  // namespace tdk::io
