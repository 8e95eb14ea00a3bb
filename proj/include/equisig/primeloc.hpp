#ifndef EQUISIG_PRIMELOC_HPP
#define EQUISIG_PRIMELOC_HPP

#include "equisig/primeloc/localized.hpp"
#include "equisig/primeloc/prime.hpp"

#endif  // EQUISIG_PRIMELOC_HPP
