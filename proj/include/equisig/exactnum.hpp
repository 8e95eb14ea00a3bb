#ifndef EQUISIG_EXACTNUM_HPP
#define EQUISIG_EXACTNUM_HPP

#include "equisig/exactnum/cyclotomic.hpp"
#include "equisig/exactnum/int_matrix.hpp"
#include "equisig/exactnum/mod_poly.hpp"
#include "equisig/exactnum/polynomial.hpp"
#include "equisig/exactnum/rational.hpp"

#endif  // EQUISIG_EXACTNUM_HPP
