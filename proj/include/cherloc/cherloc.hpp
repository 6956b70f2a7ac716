#pragma once

#include "cherloc/box_order.hpp"
#include "cherloc/deform.hpp"
#include "cherloc/json_io.hpp"
#include "cherloc/loci.hpp"
#include "cherloc/matching.hpp"
#include "cherloc/multipartition.hpp"
#include "cherloc/order.hpp"
#include "cherloc/rational.hpp"
#include "cherloc/relation.hpp"
#include "cherloc/scalar.hpp"
#include "cherloc/job.hpp"
