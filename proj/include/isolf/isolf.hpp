#pragma once

#include "isolf/assessment.hpp"
#include "isolf/error.hpp"
#include "isolf/evaluate.hpp"
#include "isolf/io.hpp"
#include "isolf/layer.hpp"
#include "isolf/misa.hpp"
#include "isolf/number_format.hpp"
#include "isolf/report.hpp"
#include "isolf/schema.hpp"
