#pragma once

#include "litigacost/analysis.hpp"
#include "litigacost/decimal.hpp"
#include "litigacost/document.hpp"
#include "litigacost/error.hpp"
#include "litigacost/model.hpp"
#include "litigacost/money.hpp"
#include "litigacost/render.hpp"
