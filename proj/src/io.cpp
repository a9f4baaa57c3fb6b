#include "kerrforge/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace kerrforge::io {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed: " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move into place: " + path);
  }
}

std::string wigner_field_csv(const WignerField& field) {
  std::string out = "re,im,w\n";
  for (int i = 0; i < field.nx(); ++i)
    for (int j = 0; j < field.ny(); ++j) {
      out += fmt6(field.re(i));
      out += ',';
      out += fmt6(field.im(j));
      out += ',';
      out += fmt6(field.values(i, j));
      out += '\n';
    }
  return out;
}

std::string wigner_field_pgm(const WignerField& field) {
  const double bound = kWignerBound;
  std::string out =
      "P5\n" + std::to_string(field.nx()) + " " + std::to_string(field.ny()) + "\n255\n";
  out.reserve(out.size() + static_cast<size_t>(field.nx()) * field.ny());
  for (int j = field.ny() - 1; j >= 0; --j)
    for (int i = 0; i < field.nx(); ++i) {
      const double v = std::clamp(field.values(i, j), -bound, bound);
      const int byte = static_cast<int>(std::lround((v + bound) / (2.0 * bound) * 255.0));
      out.push_back(static_cast<char>(byte));
    }
  return out;
}

std::string schedule_csv(const PulseSchedule& schedule) {
  std::string out = "index,kind,phase_rad,duration_s\n";
  for (const auto& p : schedule.pulses) {
    out += std::to_string(p.index);
    out += ',';
    out += pulse_kind_name(p.kind);
    out += ',';
    out += fmt6(p.phase);
    out += ',';
    out += fmt6(p.duration);
    out += '\n';
  }
  return out;
}

}  // namespace kerrforge::io
