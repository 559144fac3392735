// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "galtwist/construct.hpp"
#include "galtwist/coverring.hpp"
#include "galtwist/cyclotomic.hpp"
#include "galtwist/ffcheck.hpp"
#include "galtwist/galois.hpp"
#include "galtwist/multipoly.hpp"
#include "galtwist/parse.hpp"
#include "galtwist/rank.hpp"
#include "galtwist/rational.hpp"
#include "galtwist/specio.hpp"
#include "galtwist/varname.hpp"
#include "galtwist/verify.hpp"
