#ifndef EXACTCOMB_CLASSICS_HPP
#define EXACTCOMB_CLASSICS_HPP

#include "exactcomb/classics/factorization.hpp"
#include "exactcomb/classics/fundament.hpp"
#include "exactcomb/classics/linearspace.hpp"
#include "exactcomb/classics/representatives.hpp"

#endif  // EXACTCOMB_CLASSICS_HPP
