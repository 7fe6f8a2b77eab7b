#ifndef MSG_MSG_HPP_
#define MSG_MSG_HPP_

#include "msg/analytic.hpp"
#include "msg/entanglement.hpp"
#include "msg/errors.hpp"
#include "msg/game.hpp"
#include "msg/linalg.hpp"
#include "msg/spin_model.hpp"
#include "msg/sweep.hpp"
#include "msg/validate.hpp"

#endif  // MSG_MSG_HPP_
