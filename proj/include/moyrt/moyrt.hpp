// Umbrella header.
#pragma once

#include "builder.hpp"
#include "diagram.hpp"
#include "gdim.hpp"
#include "json_io.hpp"
#include "links.hpp"
#include "partition.hpp"
#include "qalg.hpp"
#include "random.hpp"
#include "samples.hpp"
#include "skein.hpp"
#include "state_sum.hpp"
#include "symfunc.hpp"
#include "verify.hpp"
