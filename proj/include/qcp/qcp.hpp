#pragma once

#include "qcp/arrangement.hpp"
#include "qcp/characteristic.hpp"
#include "qcp/errors.hpp"
#include "qcp/families.hpp"
#include "qcp/integer.hpp"
#include "qcp/ktt.hpp"
#include "qcp/matrix.hpp"
#include "qcp/number_theory.hpp"
#include "qcp/oracle.hpp"
#include "qcp/polynomial.hpp"
#include "qcp/quasipoly.hpp"
#include "qcp/rootsys.hpp"
#include "qcp/smith.hpp"
