#pragma once

// Umbrella header for the signature-based Groebner basis engine.

#include "prime_field.hpp"
#include "monomial.hpp"
#include "term_order.hpp"
#include "polynomial.hpp"
#include "monomial_ideal.hpp"
#include "module_term.hpp"
#include "syzygy_set.hpp"
#include "sgb.hpp"
#include "buchberger.hpp"
#include "slb.hpp"
#include "bench.hpp"
#include "io.hpp"
#include "experiment.hpp"
