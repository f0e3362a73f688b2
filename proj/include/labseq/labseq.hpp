#pragma once

#include "labseq/barker.hpp"
#include "labseq/bounds.hpp"
#include "labseq/common.hpp"
#include "labseq/decomposition.hpp"
#include "labseq/fit.hpp"
#include "labseq/levels.hpp"
#include "labseq/records.hpp"
#include "labseq/search.hpp"
#include "labseq/sequence.hpp"
#include "labseq/symmetry.hpp"
