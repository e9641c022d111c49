// Copyright 2026 The Authors.
//
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

#include <cstdint>
#include <memory>
#include <utility>

#include "submax/eme.h"
#include "submax/errors.h"
#include "submax/matroid.h"
#include "submax/matroid_solver.h"
#include "submax/set_function.h"

namespace submax {
namespace {

class QueryMeter {
 public:
  QueryMeter(const SetFunction& f, const Matroid& m)
      : f_(f), m_(m), value_(f.queries()), independence_(m.queries()) {}
  QueryCounts Lap() {
    QueryCounts out{f_.queries() - value_, m_.queries() - independence_};
    value_ = f_.queries();
    independence_ = m_.queries();
    return out;
  }

 private:
  const SetFunction& f_;
  const Matroid& m_;
  std::int64_t value_;
  std::int64_t independence_;
};

}  // namespace

MatroidRun SolveMatroid(std::shared_ptr<const Matroid> m,
                        std::shared_ptr<const SetFunction> f,
                        const AlgoConfig& config) {
  if (f->size() != m->size()) {
    throw InvalidArgument("objective and matroid have different ground sets");
  }
  MatroidRun run;
  run.config = config;
  run.n = m->size();
  run.rank = m->rank();
  // Z may absorb dummies; the extra copies keep a zero-marginal filler
  // outside Z available to Split while Z is shifted out.
  run.dummies = config.dummy_count.value_or(2 * run.rank);
  run.config.dummy_count = run.dummies;
  const auto augmented = Augment(m, run.dummies);
  const auto f_bar = AugmentWithDummies(f, run.dummies);
  const ElementSet real = ElementSet::Prefix(run.n);

  QueryMeter meter(*f, *m);
  QueryMeter total(*f, *m);
  run.local_search = LocalSearch(*augmented, *f_bar, config.epsilon);
  run.z_real = run.local_search.z & real;
  run.z_value = f->Value(run.z_real);
  run.local_search_queries = meter.Lap();

  run.greedy = ContinuousGreedy(*augmented, f_bar, run.local_search.z, config);
  run.greedy_queries = meter.Lap();
  run.greedy_queries.value = run.greedy.value_queries;

  run.fractional_value =
      run.greedy.trace.empty() ? f->Value(ElementSet())
                               : run.greedy.trace.back().value;
  run.pipage = PipageRound(*augmented, *f_bar, run.greedy.y, config.tolerance);
  run.pipage_queries = meter.Lap();

  if (run.pipage.value >= run.z_value) {
    run.set = run.pipage.set;
    run.value = run.pipage.value;
    run.chosen = "pipage";
  } else {
    run.set = run.z_real;
    run.value = run.z_value;
    run.chosen = "local_search";
  }
  if (!m->IsIndependent(run.set)) {
    throw ContractViolation("solver returned a dependent set");
  }
  run.total_queries = total.Lap();
  return run;
}

}  // namespace submax
