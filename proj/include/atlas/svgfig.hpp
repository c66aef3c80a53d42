#pragma once

#include <string>

#include "atlas/rootspace.hpp"

namespace atlas {

/// Projection figures as hand-emitted SVG, deterministic byte-for-byte.
/// g2/f4/e6/e7/e8: all roots projected on the a2 plane, one dot per distinct
/// projection with its fiber multiplicity; the zero fiber is annotated with
/// the Cartan rank. "c3" draws the three parallel planes of the f4 geometry
/// side by side. Exact coordinates are converted to floats only here.
std::string render_figure(const std::string& name);

/// Writes render_figure(name) to the path; throws std::runtime_error when
/// the file cannot be opened.
void emit_figure(const std::string& name, const std::string& path);

}  // namespace atlas
