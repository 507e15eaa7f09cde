#pragma once

#include "errors.hpp"
#include "exactcore.hpp"
#include "habiro.hpp"
#include "highprec.hpp"
#include "json_io.hpp"
#include "modforms.hpp"
#include "periods.hpp"
#include "rvtransform.hpp"
#include "zerocert.hpp"
