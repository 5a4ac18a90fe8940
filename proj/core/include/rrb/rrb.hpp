#pragma once

#include "rrb/abelian.hpp"
#include "rrb/cohomology.hpp"
#include "rrb/error.hpp"
#include "rrb/extension.hpp"
#include "rrb/finite_group.hpp"
#include "rrb/io.hpp"
#include "rrb/module.hpp"
#include "rrb/rrb_group.hpp"
#include "rrb/smith.hpp"
#include "rrb/wells.hpp"
