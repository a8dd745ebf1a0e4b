#pragma once

#include "alglength/algebra.hpp"
#include "alglength/bounds.hpp"
#include "alglength/echelon.hpp"
#include "alglength/error.hpp"
#include "alglength/families.hpp"
#include "alglength/io.hpp"
#include "alglength/length.hpp"
#include "alglength/oracle.hpp"
#include "alglength/scalar.hpp"
