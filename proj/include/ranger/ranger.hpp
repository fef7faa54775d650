#pragma once

// Umbrella header for the full engine.

#include "ranger/anytime.hpp"
#include "ranger/arrangement.hpp"
#include "ranger/bench.hpp"
#include "ranger/clock.hpp"
#include "ranger/clustering.hpp"
#include "ranger/codec.hpp"
#include "ranger/common.hpp"
#include "ranger/evalreport.hpp"
#include "ranger/forward_index.hpp"
#include "ranger/index.hpp"
#include "ranger/index_io.hpp"
#include "ranger/policy.hpp"
#include "ranger/porter.hpp"
#include "ranger/rbo.hpp"
#include "ranger/runfile.hpp"
#include "ranger/scoring.hpp"
#include "ranger/search.hpp"
#include "ranger/tokenizer.hpp"
#include "ranger/topk.hpp"
#include "ranger/traversal.hpp"
#include "ranger/varint.hpp"
