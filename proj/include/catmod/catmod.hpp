#pragma once

// Umbrella header for the catmod library: digit-based congruence kernels
// for Catalan, Motzkin and related sequences, exact arbitrary-precision
// oracles, brute-force enumeration, and the verification harness.

#include "catmod/bfile.hpp"
#include "catmod/digits.hpp"
#include "catmod/enumerate.hpp"
#include "catmod/exact.hpp"
#include "catmod/lucas.hpp"
#include "catmod/natural.hpp"
#include "catmod/residues.hpp"
#include "catmod/sequences.hpp"
#include "catmod/streams.hpp"
#include "catmod/thue_morse.hpp"
#include "catmod/verify.hpp"
