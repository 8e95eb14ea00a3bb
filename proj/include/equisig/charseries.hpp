#ifndef EQUISIG_CHARSERIES_HPP
#define EQUISIG_CHARSERIES_HPP

#include "equisig/charseries/series.hpp"

#endif  // EQUISIG_CHARSERIES_HPP
