#pragma once

#include "coxhyp/almost_negative.hpp"
#include "coxhyp/chamber.hpp"
#include "coxhyp/counterexamples.hpp"
#include "coxhyp/coxeter_system.hpp"
#include "coxhyp/errors.hpp"
#include "coxhyp/hyperbolicity.hpp"
#include "coxhyp/index_set.hpp"
#include "coxhyp/io.hpp"
#include "coxhyp/nerve.hpp"
