#ifndef EQUISIG_ARTIN_HPP
#define EQUISIG_ARTIN_HPP

#include "equisig/artin/certificate.hpp"

#endif  // EQUISIG_ARTIN_HPP
