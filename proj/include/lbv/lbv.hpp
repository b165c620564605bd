#pragma once

#include <lbv/scalar.hpp>
#include <lbv/interval.hpp>
#include <lbv/cochain.hpp>
#include <lbv/weyl_algebra.hpp>
#include <lbv/complex.hpp>
#include <lbv/reduction.hpp>
#include <lbv/cohomology.hpp>
#include <lbv/operad.hpp>
#include <lbv/weyl.hpp>
#include <lbv/parse.hpp>
#include <lbv/random.hpp>
#include <lbv/witness.hpp>
