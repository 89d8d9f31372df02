#pragma once

#include "neighborly/binomial.hpp"
#include "neighborly/bounds.hpp"
#include "neighborly/constructions.hpp"
#include "neighborly/enumeration.hpp"
#include "neighborly/error.hpp"
#include "neighborly/gale_diagram.hpp"
#include "neighborly/json_io.hpp"
#include "neighborly/oracle.hpp"
