// Core engine without the HTTP layer.
#pragma once

#include "sdnim/classifier.hpp"
#include "sdnim/core.hpp"
#include "sdnim/harness.hpp"
#include "sdnim/json.hpp"
#include "sdnim/oracle.hpp"
#include "sdnim/strategy.hpp"
