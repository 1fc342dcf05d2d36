// Umbrella header: pulls in the whole library.
#pragma once

#include "kappa/cache.hpp"
#include "kappa/golden_d6.hpp"
#include "kappa/kappa_polynomial.hpp"
#include "kappa/matrix.hpp"
#include "kappa/oracle_pushforward.hpp"
#include "kappa/partition.hpp"
#include "kappa/pushforward.hpp"
#include "kappa/rational.hpp"
#include "kappa/relations.hpp"
#include "kappa/ring.hpp"
#include "kappa/serialize.hpp"
#include "kappa/series.hpp"
