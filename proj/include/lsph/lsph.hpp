#pragma once

// Umbrella header: level-set persistent homology of 2D spatial data.
//
// Pipeline: BinaryMask (from an image or a thresholded region map)
//   -> arrival_time_field   exact front-propagation arrival times
//   -> FilteredComplex      lower-star filtration of the triangulated grid
//   -> compute_persistence  0D/1D birth-death pairs
//   -> export/render/report serialization, plots, band and hotspot summaries

#include "lsph/betti_oracle.hpp"
#include "lsph/complex.hpp"
#include "lsph/diagram_io.hpp"
#include "lsph/errors.hpp"
#include "lsph/geojson.hpp"
#include "lsph/hotspot.hpp"
#include "lsph/image_io.hpp"
#include "lsph/levelset.hpp"
#include "lsph/mask.hpp"
#include "lsph/persistence.hpp"
#include "lsph/region_map.hpp"
#include "lsph/validate.hpp"
