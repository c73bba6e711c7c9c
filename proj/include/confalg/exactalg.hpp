#pragma once

#include "confalg/errors.hpp"
#include "confalg/exactalg/field.hpp"
#include "confalg/exactalg/matrix.hpp"
#include "confalg/exactalg/multipoly.hpp"
#include "confalg/exactalg/quadext.hpp"
#include "confalg/exactalg/rational.hpp"
#include "confalg/exactalg/resultant.hpp"
#include "confalg/exactalg/ring.hpp"
#include "confalg/exactalg/symmetric.hpp"
#include "confalg/exactalg/unipoly.hpp"
