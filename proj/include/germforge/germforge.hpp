#pragma once

#include "errors.hpp"
#include "limits.hpp"
#include "rational.hpp"
#include "monomial.hpp"
#include "ring.hpp"
#include "polynomial.hpp"
#include "poly_parser.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "ideal_ops.hpp"
#include "dimension.hpp"
#include "real_refine.hpp"
#include "extension.hpp"
#include "map_germ.hpp"
#include "stratification.hpp"
#include "milnor.hpp"
#include "tameness.hpp"
#include "fiber.hpp"
#include "germ_file.hpp"
#include "json_report.hpp"
