#pragma once

#include "scalar.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "partition.hpp"
#include "group_ring.hpp"
#include "characters.hpp"
#include "natural_rep.hpp"
#include "dft.hpp"
#include "star_transfer.hpp"
#include "decomposition.hpp"
#include "heisenberg.hpp"
#include "io.hpp"
