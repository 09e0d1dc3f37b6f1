#pragma once

#include "minlines/errors.hpp"
#include "minlines/lattice.hpp"
#include "minlines/parabolic_set.hpp"
#include "minlines/rootsys.hpp"
#include "minlines/weyl.hpp"
#include "minlines/tables.hpp"
#include "minlines/schubert.hpp"
#include "minlines/bottsam.hpp"
#include "minlines/perrin.hpp"
