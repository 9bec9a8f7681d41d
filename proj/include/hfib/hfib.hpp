#pragma once

#include "hfib/rational.hpp"
#include "hfib/hpoly.hpp"
#include "hfib/hpoly_json.hpp"
#include "hfib/identity_report.hpp"
#include "hfib/h_pascal.hpp"
#include "hfib/operators.hpp"
#include "hfib/h_fibonacci.hpp"
#include "hfib/operator_identities.hpp"
#include "hfib/generating_functions.hpp"
#include "hfib/qh_analogue.hpp"
#include "hfib/sampling.hpp"
#include "hfib/suites.hpp"
