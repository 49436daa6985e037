#pragma once

// Umbrella header.

#include "kkg/cache.hpp"
#include "kkg/errors.hpp"
#include "kkg/field.hpp"
#include "kkg/groupalg.hpp"
#include "kkg/identities.hpp"
#include "kkg/matgrp.hpp"
#include "kkg/matrix.hpp"
#include "kkg/numtheory.hpp"
#include "kkg/oracle.hpp"
#include "kkg/report.hpp"
#include "kkg/ring.hpp"
#include "kkg/ring_selftest.hpp"
#include "kkg/verify.hpp"
