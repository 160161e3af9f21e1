#pragma once

#include "qpoly.hpp"
#include "xseries.hpp"
#include "polymatrix.hpp"
#include "seidel.hpp"
#include "pistols.hpp"
#include "perms.hpp"
#include "qmatrix.hpp"
#include "paths.hpp"
#include "tableaux.hpp"
#include "triangle.hpp"
