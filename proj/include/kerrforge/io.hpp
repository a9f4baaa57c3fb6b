// Deterministic file emission: atomic writes, fixed-format CSV, PGM rasters.
#ifndef KERRFORGE_IO_HPP
#define KERRFORGE_IO_HPP

#include <string>

#include "kerrforge/pulse.hpp"
#include "kerrforge/wigner.hpp"

namespace kerrforge::io {

// 6 significant digits, locale-independent; the CSV number format.
std::string fmt6(double v);

// Full-precision round-trip format; the JSON number format.
std::string fmt_full(double v);

// Writes content to path via a temporary file + rename, so a failed write
// never leaves a partial file behind.
void atomic_write(const std::string& path, const std::string& content);

// Header "re,im,w"; rows ordered Re-major to match the grid layout.
std::string wigner_field_csv(const WignerField& field);

// Binary PGM (P5), linear map [-2/pi, 2/pi] -> [0, 255]. Rows run over Im
// from top (im_max) to bottom, columns over Re.
std::string wigner_field_pgm(const WignerField& field);

// Header "index,kind,phase_rad,duration_s".
std::string schedule_csv(const PulseSchedule& schedule);

}  // namespace kerrforge::io

#endif
