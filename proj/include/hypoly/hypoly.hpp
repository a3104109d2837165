#pragma once

#include "hypoly/errors.hpp"
#include "hypoly/pe_core.hpp"
#include "hypoly/area.hpp"
#include "hypoly/cocyclic.hpp"
#include "hypoly/construct.hpp"
#include "hypoly/maximize.hpp"
