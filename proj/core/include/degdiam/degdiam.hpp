#pragma once

// Umbrella header for the degdiam library.

#include <degdiam/cayley.hpp>
#include <degdiam/element.hpp>
#include <degdiam/errors.hpp>
#include <degdiam/group.hpp>
#include <degdiam/json_io.hpp>
#include <degdiam/records.hpp>
#include <degdiam/rng.hpp>
#include <degdiam/search.hpp>
