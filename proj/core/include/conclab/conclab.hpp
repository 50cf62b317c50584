#pragma once

#include "conclab/abgroup.hpp"
#include "conclab/dinv.hpp"
#include "conclab/error.hpp"
#include "conclab/json.hpp"
#include "conclab/matrix.hpp"
#include "conclab/numeric.hpp"
#include "conclab/obstruct.hpp"
#include "conclab/parse.hpp"
#include "conclab/polyalg.hpp"
#include "conclab/primes.hpp"
#include "conclab/seifert.hpp"
#include "conclab/upoly.hpp"
