#pragma once

#include "aguiar/characters.hpp"
#include "aguiar/checked.hpp"
#include "aguiar/error.hpp"
#include "aguiar/heisenberg.hpp"
#include "aguiar/kronecker.hpp"
#include "aguiar/lr.hpp"
#include "aguiar/partition.hpp"
#include "aguiar/stability.hpp"
#include "aguiar/table_io.hpp"
