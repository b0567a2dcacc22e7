#pragma once

#include "pcgauss/integer.hpp"
#include "pcgauss/errors.hpp"
#include "pcgauss/presentation.hpp"
#include "pcgauss/collect.hpp"
#include "pcgauss/igs.hpp"
#include "pcgauss/oracle.hpp"
