#pragma once

#include "catalog.hpp"
#include "certifier.hpp"
#include "errors.hpp"
#include "laguerre.hpp"
#include "modular.hpp"
#include "monodromy.hpp"
#include "parallel.hpp"
#include "permgroup.hpp"
#include "polyalg.hpp"
#include "report.hpp"
#include "rhgenus.hpp"
#include "scanner.hpp"
#include "simplecover.hpp"
