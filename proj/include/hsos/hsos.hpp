#pragma once

#include "hsos/groebner/ideal_ops.hpp"
#include "hsos/hermitian/inertia.hpp"
#include "hsos/io/json.hpp"
#include "hsos/koszul/koszul.hpp"
#include "hsos/sos/corpus.hpp"
#include "hsos/sos/search.hpp"
#include "hsos/sos/verify.hpp"
