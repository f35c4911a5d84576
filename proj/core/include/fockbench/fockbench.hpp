#pragma once

#include "fockbench/analysis.hpp"
#include "fockbench/operator_spec.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/quadrature.hpp"
#include "fockbench/special.hpp"
#include "fockbench/symbols.hpp"
#include "fockbench/transforms.hpp"
#include "fockbench/truncated_operator.hpp"
#include "fockbench/types.hpp"
