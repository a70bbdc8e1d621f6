// Copyright 2026 The lly Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random graphs and measures shared by the unit tests and the acceptance
// run.

#ifndef LLY_TESTS_RANDOM_INSTANCES_H_
#define LLY_TESTS_RANDOM_INSTANCES_H_

#include <map>
#include <random>

#include "lly/graph.h"
#include "lly/transport.h"

namespace lly::testing_util {

// Random spanning tree plus independent extra edges.
Graph RandomConnectedGraph(std::mt19937& rng, int n);

// Random probability measure on a random nonempty vertex subset, with
// masses drawn from small integer weights.
Measure RandomMeasure(std::mt19937& rng, int n);

struct TransportInstance {
  Graph graph;
  Measure mu1;
  Measure mu2;
};

// Connected graph on 1..10 vertices and two random measures on it.
TransportInstance RandomTransportInstance(std::mt19937& rng);

// Row sums equal mu1, column sums equal mu2, all entries positive.
bool MarginalsExact(const TransportPlan& plan, const Measure& mu1,
                    const Measure& mu2);

}  // namespace lly::testing_util

#endif  // LLY_TESTS_RANDOM_INSTANCES_H_
