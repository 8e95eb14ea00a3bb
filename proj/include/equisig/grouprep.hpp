#ifndef EQUISIG_GROUPREP_HPP
#define EQUISIG_GROUPREP_HPP

#include "equisig/grouprep/group.hpp"
#include "equisig/grouprep/virtual_rep.hpp"

#endif  // EQUISIG_GROUPREP_HPP
