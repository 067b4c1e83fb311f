#pragma once

#include "automaton.hpp"
#include "bounds.hpp"
#include "closure.hpp"
#include "determinize.hpp"
#include "enumerate.hpp"
#include "harness.hpp"
#include "kuratowski.hpp"
#include "language.hpp"
#include "minimize.hpp"
#include "ops.hpp"
#include "random.hpp"
#include "regex.hpp"
#include "text_format.hpp"
#include "witnesses.hpp"
