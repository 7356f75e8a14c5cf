#ifndef MULTITREE_MULTITREE_HPP
#define MULTITREE_MULTITREE_HPP

#include "bigcount.hpp"
#include "code.hpp"
#include "core.hpp"
#include "dp.hpp"
#include "io.hpp"
#include "oracle.hpp"

#endif  // MULTITREE_MULTITREE_HPP
