/**
 * @file chshstar/chshstar.hpp
 * @brief Umbrella header.
 */
#pragma once

#include "chshmap.hpp"
#include "game.hpp"
#include "landauer.hpp"
#include "nelder_mead.hpp"
#include "qcore.hpp"
#include "settings.hpp"
#include "strategies.hpp"
