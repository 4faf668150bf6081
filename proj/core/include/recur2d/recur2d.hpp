#pragma once

/**
 * @file recur2d.hpp
 * @brief Solvers for 2-d linear recurrences w(i,j) = a·w(i-1,j) + b·w(i,j-1) + c.
 *
 * Four evaluation strategies over a shared data model:
 *   - naive_solve: direct sequential sweep, the ground-truth oracle
 *   - wavefront_solve: anti-diagonal phases, cells within a phase in parallel
 *   - reduced_sequential_solve: the grid collapsed to a 1-d affine recurrence
 *     over packed diagonals, iterated step by step
 *   - scan_solve: the same 1-d recurrence evaluated by a Kogge–Stone
 *     inclusive prefix scan over affine operators, ⌈log₂(2n-1)⌉ rounds
 *
 * Scalars come in two modes: binary64 (`double`) and exact arbitrary-
 * precision rationals (`Rational`), making solver equivalence a bit-exact,
 * reassociation-immune property in exact mode.
 */

#include "recur2d/diagonal.hpp"
#include "recur2d/generator.hpp"
#include "recur2d/instance_io.hpp"
#include "recur2d/parallel.hpp"
#include "recur2d/problem.hpp"
#include "recur2d/rational.hpp"
#include "recur2d/reduction.hpp"
#include "recur2d/scalar.hpp"
#include "recur2d/schedule.hpp"
#include "recur2d/solvers.hpp"
