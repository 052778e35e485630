#pragma once

#include "ophits/error.hpp"
#include "ophits/corpus.hpp"
#include "ophits/textmodel.hpp"
#include "ophits/features.hpp"
#include "ophits/classifier.hpp"
#include "ophits/hits.hpp"
#include "ophits/report.hpp"
#include "ophits/pipeline.hpp"
#include "ophits/eval.hpp"
