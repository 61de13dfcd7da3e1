#pragma once

#include <jacder/bivar_poly.hpp>
#include <jacder/centralizer.hpp>
#include <jacder/derivation.hpp>
#include <jacder/eigen.hpp>
#include <jacder/error.hpp>
#include <jacder/kernel.hpp>
#include <jacder/linear_solve.hpp>
#include <jacder/ode.hpp>
#include <jacder/rational.hpp>
#include <jacder/rational_function.hpp>
#include <jacder/univar_poly.hpp>
