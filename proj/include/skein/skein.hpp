#pragma once

#include "skein/boundary_action.hpp"
#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"
#include "skein/handlebody.hpp"
#include "skein/knot_module.hpp"
#include "skein/laurent.hpp"
#include "skein/poly2.hpp"
#include "skein/torus.hpp"
#include "skein/io/fixtures.hpp"
#include "skein/io/json_io.hpp"
#include "skein/io/parser.hpp"
#include "skein/io/printer.hpp"
#include "skein/verify.hpp"
