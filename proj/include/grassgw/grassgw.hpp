#pragma once

#include "bott.hpp"
#include "crosscheck.hpp"
#include "gw.hpp"
#include "lr.hpp"
#include "pairing.hpp"
#include "verify.hpp"
#include "young.hpp"
