#pragma once

#include "ldi/arith.hpp"
#include "ldi/distance.hpp"
#include "ldi/embedding.hpp"
#include "ldi/io.hpp"
#include "ldi/linalg.hpp"
#include "ldi/logical.hpp"
#include "ldi/pauli.hpp"
#include "ldi/stabilizer_code.hpp"
#include "ldi/state.hpp"
#include "ldi/symplectic.hpp"
