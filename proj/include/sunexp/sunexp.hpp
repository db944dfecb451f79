#pragma once

#include "sunexp/twoadic.hpp"
#include "sunexp/partial_stirling.hpp"
#include "sunexp/exponents.hpp"
#include "sunexp/tables.hpp"
#include "sunexp/verify.hpp"
#include "sunexp/format.hpp"
