#pragma once

#include <ncgrowth/numeric.hpp>
#include <ncgrowth/series.hpp>
#include <ncgrowth/presentation.hpp>
#include <ncgrowth/automaton.hpp>
#include <ncgrowth/sparse_echelon.hpp>
#include <ncgrowth/groebner.hpp>
#include <ncgrowth/chains.hpp>
#include <ncgrowth/growth.hpp>
