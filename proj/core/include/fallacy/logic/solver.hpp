// Copyright 2026 The fallacyforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fallacy/logic/clause.hpp"
#include "fallacy/logic/database.hpp"
#include "fallacy/logic/substitution.hpp"

namespace fallacy::logic {

struct SolveOptions {
  /// Maximum derivation depth of any selected goal.
  std::size_t max_depth = 10'000;
};

/// Depth-first, left-to-right SLD resolution with negation-as-failure.
///
/// Solutions are produced lazily by `next()`. Each solution is restricted to
/// the variables of the query and fully applied. Clauses are tried in the
/// order the database returns them.
///
/// Throws FlounderError when a negated literal is selected while non-ground
/// and DepthLimitError when a goal deeper than `max_depth` is selected.
///
/// A solver is single-use and must stay on one thread; the database must
/// outlive it and must not change while it runs.
class Solver {
 public:
  Solver(const ClauseDatabase& db, std::vector<Literal> goals,
         SolveOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  /// Next solution, or nullopt once the search space is exhausted.
  std::optional<Substitution> next();

  [[nodiscard]] const std::vector<Variable>& query_variables() const noexcept;

 private:
  struct State;
  Solver(const ClauseDatabase& db, std::vector<Literal> goals,
         SolveOptions options, std::size_t base_depth,
         std::shared_ptr<std::uint32_t> scope_counter);

  std::unique_ptr<State> state_;
};

/// Every solution, in order.
[[nodiscard]] std::vector<Substitution> solve_all(const ClauseDatabase& db,
                                                  std::vector<Literal> goals,
                                                  SolveOptions options = {});

/// `template` instantiated under every solution, duplicates preserved.
[[nodiscard]] std::vector<Term> findall(const Term& template_term,
                                        std::vector<Literal> goals,
                                        const ClauseDatabase& db,
                                        SolveOptions options = {});

}  // namespace fallacy::logic
