#pragma once

// Everything at once.

#include "braided_algebra.hpp"
#include "gvb_word.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "lifting.hpp"
#include "linalg.hpp"
#include "perm_sum.hpp"
#include "permutation.hpp"
#include "products.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "tensor.hpp"
#include "verify.hpp"
