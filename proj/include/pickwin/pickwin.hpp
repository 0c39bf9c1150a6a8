#pragma once

#include "pickwin/csv.hpp"
#include "pickwin/exit_model.hpp"
#include "pickwin/feature_matrix.hpp"
#include "pickwin/features.hpp"
#include "pickwin/fpt.hpp"
#include "pickwin/io.hpp"
#include "pickwin/likelihood.hpp"
#include "pickwin/portfolio.hpp"
#include "pickwin/simulator.hpp"
#include "pickwin/soft_impute.hpp"
#include "pickwin/svg.hpp"
#include "pickwin/theory.hpp"
