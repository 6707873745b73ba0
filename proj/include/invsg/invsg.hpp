// invsg - finite inverse semigroups and their restricted algebras

#pragma once

#include "error.hpp"
#include "semigroup.hpp"
#include "generators.hpp"
#include "restricted.hpp"
#include "algebra.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "representations.hpp"
#include "cstar.hpp"
#include "corpus.hpp"
#include "io.hpp"
#include "verify.hpp"
