#pragma once

#include "cmr/idempotent.hpp"
#include "cmr/int_polynomial.hpp"
#include "cmr/integers.hpp"
#include "cmr/monoid_algebra.hpp"
#include "cmr/parse.hpp"
#include "cmr/perfect_algebra.hpp"
#include "cmr/truncated.hpp"
#include "cmr/witt.hpp"
#include "cmr/zmod_howell.hpp"
