#pragma once

// Umbrella header for the whole pipeline: diagrams and their metrics,
// perturbed surface embeddings, Grassmann metrics and kernels, synthetic
// data, classification helpers, and the experiment drivers.

#include "pts/datasets.hpp"
#include "pts/diagram.hpp"
#include "pts/embedding.hpp"
#include "pts/experiments.hpp"
#include "pts/grassmann.hpp"
#include "pts/io.hpp"
#include "pts/learn.hpp"
#include "pts/parallel.hpp"
#include "pts/pd_metrics.hpp"
#include "pts/persistence.hpp"
#include "pts/rng.hpp"
#include "pts/surface.hpp"
