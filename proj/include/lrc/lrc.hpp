#pragma once

#include "lrc/closed_forms.hpp"
#include "lrc/closeness.hpp"
#include "lrc/dyadic.hpp"
#include "lrc/edgelist.hpp"
#include "lrc/errors.hpp"
#include "lrc/graph.hpp"
#include "lrc/harary.hpp"
#include "lrc/verify.hpp"
