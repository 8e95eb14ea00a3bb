#ifndef EQUISIG_EQUISIG_HPP
#define EQUISIG_EQUISIG_HPP

#include "equisig/artin.hpp"
#include "equisig/charseries.hpp"
#include "equisig/exactnum.hpp"
#include "equisig/grouprep.hpp"
#include "equisig/gsig.hpp"
#include "equisig/lens.hpp"
#include "equisig/primeloc.hpp"

#endif  // EQUISIG_EQUISIG_HPP
