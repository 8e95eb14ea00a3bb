#ifndef EQUISIG_LENS_HPP
#define EQUISIG_LENS_HPP

#include "equisig/lens/lens_space.hpp"

#endif  // EQUISIG_LENS_HPP
