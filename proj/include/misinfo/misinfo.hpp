#pragma once

#include "misinfo/analytics.hpp"
#include "misinfo/config.hpp"
#include "misinfo/conformance.hpp"
#include "misinfo/corpus.hpp"
#include "misinfo/digest.hpp"
#include "misinfo/embed.hpp"
#include "misinfo/enrichment.hpp"
#include "misinfo/error.hpp"
#include "misinfo/evaluation.hpp"
#include "misinfo/external.hpp"
#include "misinfo/index.hpp"
#include "misinfo/jsonl.hpp"
#include "misinfo/lexicons.hpp"
#include "misinfo/linguistic.hpp"
#include "misinfo/pipeline.hpp"
#include "misinfo/retrieval.hpp"
#include "misinfo/rng.hpp"
#include "misinfo/scorer.hpp"
#include "misinfo/sidecar.hpp"
#include "misinfo/svo.hpp"
#include "misinfo/text.hpp"
#include "misinfo/timeutil.hpp"
#include "misinfo/types.hpp"
