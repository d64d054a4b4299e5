#pragma once

// Umbrella header: exact polynomial arithmetic, derivations and their word
// calculus, finite-dimensional operators and structure algebras, the three
// valued nilpotency certificates, classification of algebras, the
// derivation-finite suite, and the shipped example constructions.

#include "derivlab/certificate.hpp"
#include "derivlab/constructions.hpp"
#include "derivlab/derfinite.hpp"
#include "derivlab/derivation.hpp"
#include "derivlab/errors.hpp"
#include "derivlab/field.hpp"
#include "derivlab/freemod.hpp"
#include "derivlab/json_io.hpp"
#include "derivlab/linalg.hpp"
#include "derivlab/linop.hpp"
#include "derivlab/monomial.hpp"
#include "derivlab/nilcert.hpp"
#include "derivlab/nilclass.hpp"
#include "derivlab/poly_io.hpp"
#include "derivlab/polynomial.hpp"
#include "derivlab/ring.hpp"
#include "derivlab/rng.hpp"
#include "derivlab/structure.hpp"
#include "derivlab/task.hpp"
