#pragma once

#include "checked_int.hpp"
#include "constructions.hpp"
#include "engine.hpp"
#include "group.hpp"
#include "spectrum.hpp"
#include "verifier.hpp"
