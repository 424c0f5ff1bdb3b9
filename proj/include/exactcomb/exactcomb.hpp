#ifndef EXACTCOMB_EXACTCOMB_HPP
#define EXACTCOMB_EXACTCOMB_HPP

#include "exactcomb/bigint.hpp"
#include "exactcomb/classics.hpp"
#include "exactcomb/debruijn.hpp"
#include "exactcomb/digraph.hpp"
#include "exactcomb/dimers.hpp"
#include "exactcomb/error.hpp"
#include "exactcomb/eulertours.hpp"
#include "exactcomb/generators.hpp"
#include "exactcomb/io.hpp"
#include "exactcomb/matrix.hpp"
#include "exactcomb/multipoly.hpp"
#include "exactcomb/permshapes.hpp"
#include "exactcomb/planetrees.hpp"
#include "exactcomb/polya.hpp"

#endif  // EXACTCOMB_EXACTCOMB_HPP
