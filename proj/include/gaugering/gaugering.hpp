#pragma once

#include "gaugering/cosine_power.hpp"
#include "gaugering/dirac_limit.hpp"
#include "gaugering/effective_potential.hpp"
#include "gaugering/eigensolver.hpp"
#include "gaugering/errors.hpp"
#include "gaugering/gauge_shape.hpp"
#include "gaugering/grid.hpp"
#include "gaugering/ground_state_scan.hpp"
#include "gaugering/hamiltonian.hpp"
#include "gaugering/measurement.hpp"
#include "gaugering/momentum_sector.hpp"
#include "gaugering/parallel.hpp"
#include "gaugering/phasor_uncertainty.hpp"
#include "gaugering/plane_wave_basis.hpp"
#include "gaugering/ring_dynamics.hpp"
#include "gaugering/ring_wavefunction.hpp"
#include "gaugering/two_body_state.hpp"
#include "gaugering/units.hpp"
