#pragma once

#include "strops/coefficients.hpp"
#include "strops/errors.hpp"
#include "strops/graded_algebra.hpp"
#include "strops/linalg.hpp"
#include "strops/manifold_catalog.hpp"
#include "strops/pro_tower.hpp"
#include "strops/qops.hpp"
#include "strops/ring_json.hpp"
#include "strops/sq_action.hpp"
#include "strops/steenrod.hpp"
#include "strops/string_product.hpp"
