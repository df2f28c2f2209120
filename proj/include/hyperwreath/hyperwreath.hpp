#pragma once

#include "calc.hpp"
#include "chains.hpp"
#include "liering.hpp"
#include "ordinals.hpp"
#include "partitions.hpp"
#include "polyring.hpp"
#include "random.hpp"
#include "regular.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "wreath.hpp"
