#pragma once

#include "gqg/scalar.hpp"
#include "gqg/bihom.hpp"
#include "gqg/cartan.hpp"
#include "gqg/groupoid.hpp"
#include "gqg/highestweight.hpp"
#include "gqg/classify.hpp"
