#pragma once

#include "lbranch/bigint.hpp"
#include "lbranch/characters.hpp"
#include "lbranch/errors.hpp"
#include "lbranch/json_io.hpp"
#include "lbranch/kostant.hpp"
#include "lbranch/langlands.hpp"
#include "lbranch/root_data.hpp"
#include "lbranch/version.hpp"
#include "lbranch/weight.hpp"
#include "lbranch/weyl.hpp"
