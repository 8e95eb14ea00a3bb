#ifndef EQUISIG_GSIG_HPP
#define EQUISIG_GSIG_HPP

#include "equisig/gsig/decompose.hpp"
#include "equisig/gsig/fixed_data.hpp"
#include "equisig/gsig/models.hpp"
#include "equisig/gsig/signature.hpp"

#endif  // EQUISIG_GSIG_HPP
