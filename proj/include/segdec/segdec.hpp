#pragma once

// Umbrella header for the 10-segment Bengali numeral display toolkit:
// decoding, SOP expressions, exact two-level minimization, gate-level
// netlists, LED drive arithmetic and glyph rendering.

#include "segdec/electrical.hpp"
#include "segdec/errors.hpp"
#include "segdec/glyphs.hpp"
#include "segdec/minimize.hpp"
#include "segdec/netlist.hpp"
#include "segdec/render.hpp"
#include "segdec/segments.hpp"
#include "segdec/sop.hpp"
