#pragma once

// Text renderings of lattice paths: ASCII grid, SVG 1.1 diagram, and the
// canonical JSON form.

#include "overpath/lattice_path.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace overpath {

// ASCII grid with one row per height and a legend of annotated peaks
// (weight, kind, relative height, parity).
std::string render_ascii(const LatticePath& p);

// SVG 1.1 document: one polyline through the path's vertices plus one text
// annotation per peak. `unit` is the pixel size of a lattice step.
std::string render_svg(const LatticePath& p, int unit = 24);

// {k, a, steps, peaks:[{x,y,kind,rel_height,parity}], major_index}
nlohmann::json path_json(const LatticePath& p);

}  // namespace overpath
