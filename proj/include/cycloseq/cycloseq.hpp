#pragma once

/// Umbrella header for the whole library.

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/difference_set.hpp"
#include "cycloseq/errors.hpp"
#include "cycloseq/modular.hpp"
#include "cycloseq/sequence.hpp"
#include "cycloseq/spectra.hpp"
