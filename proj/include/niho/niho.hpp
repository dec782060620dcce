// niho.hpp: everything.
#pragma once

#include "niho/gf2m.hpp"
#include "niho/geometry.hpp"
#include "niho/opoly.hpp"
#include "niho/gfun.hpp"
#include "niho/bent.hpp"
#include "niho/equiv.hpp"
#include "niho/io.hpp"
#include "niho/reproduce.hpp"
