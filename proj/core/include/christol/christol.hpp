#pragma once

#include "christol/algebraic_series.hpp"
#include "christol/algebraize.hpp"
#include "christol/automaton.hpp"
#include "christol/catalog.hpp"
#include "christol/errors.hpp"
#include "christol/finite_field.hpp"
#include "christol/kernel.hpp"
#include "christol/linear_algebra.hpp"
#include "christol/power_series.hpp"
#include "christol/weeding.hpp"
