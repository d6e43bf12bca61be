#pragma once

// Umbrella header for the chainhull library.

#include "chainhull/classify.hpp"
#include "chainhull/datasets.hpp"
#include "chainhull/errors.hpp"
#include "chainhull/extremes.hpp"
#include "chainhull/geometry.hpp"
#include "chainhull/io.hpp"
#include "chainhull/melkman.hpp"
#include "chainhull/pipeline.hpp"
#include "chainhull/polygon.hpp"
#include "chainhull/spa.hpp"
