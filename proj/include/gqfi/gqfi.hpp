#pragma once

#include "gqfi/closed_forms.hpp"
#include "gqfi/constants.hpp"
#include "gqfi/core.hpp"
#include "gqfi/dynamics.hpp"
#include "gqfi/errors.hpp"
#include "gqfi/fock_oracle.hpp"
#include "gqfi/linalg.hpp"
#include "gqfi/omt.hpp"
#include "gqfi/qfi_engine.hpp"
#include "gqfi/sensing.hpp"
