#pragma once

#include "zsg/error.hpp"
#include "zsg/rational.hpp"
#include "zsg/matrix.hpp"
#include "zsg/determinant.hpp"
#include "zsg/game.hpp"
#include "zsg/game_io.hpp"
#include "zsg/chain.hpp"
#include "zsg/matrix_game.hpp"
#include "zsg/param_game.hpp"
#include "zsg/polynomial.hpp"
#include "zsg/lll.hpp"
#include "zsg/reconstruct.hpp"
#include "zsg/discounted.hpp"
#include "zsg/limit.hpp"
#include "zsg/oracle.hpp"
