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

#include "fallacy/logic/solver.hpp"

#include <string>
#include <utility>

#include "fallacy/error.hpp"
#include "fallacy/logic/order.hpp"
#include "fallacy/logic/unify.hpp"

namespace fallacy::logic {
namespace {

// Calls of loop-checked predicates that are still open on the current branch.
struct Ancestor {
  Term call;
  std::shared_ptr<const Ancestor> parent;
};
using AncestorList = std::shared_ptr<const Ancestor>;

struct Goal {
  Literal literal;
  std::size_t depth = 0;
  AncestorList ancestors;
};

struct GoalNode;
using GoalList = std::shared_ptr<const GoalNode>;

struct GoalNode {
  Goal goal;
  GoalList next;
};

struct ChoicePoint {
  Goal goal;
  GoalList rest;
  std::span<const Clause* const> alternatives;
  std::size_t next_alternative = 0;
  std::size_t trail_mark = 0;
  AncestorList body_ancestors;
};

Term rename(const Term& term, std::uint32_t scope) {
  if (term.is_var()) return Term::var(term.as_var().name, scope);
  if (!term.is_compound() || term.is_ground()) return term;
  std::vector<Term> args;
  args.reserve(term.arity());
  for (const auto& arg : term.args()) args.push_back(rename(arg, scope));
  return Term::compound(std::string(term.name()), std::move(args));
}

Literal rename(const Literal& literal, std::uint32_t scope) {
  Literal out = literal;
  if (auto* goal = std::get_if<Term>(&out.body)) {
    *goal = rename(*goal, scope);
  } else if (auto* ne = std::get_if<Inequality>(&out.body)) {
    ne->lhs = rename(ne->lhs, scope);
    ne->rhs = rename(ne->rhs, scope);
  } else {
    auto& lt = std::get<TermLess>(out.body);
    lt.lhs = rename(lt.lhs, scope);
    lt.rhs = rename(lt.rhs, scope);
  }
  return out;
}

}  // namespace

struct Solver::State {
  const ClauseDatabase* db = nullptr;
  SolveOptions options;
  std::shared_ptr<std::uint32_t> scope_counter;
  std::vector<Variable> query_variables;
  Substitution subst;
  std::vector<Variable> trail;
  std::vector<ChoicePoint> choices;
  GoalList goals;
  bool started = false;
  bool exhausted = false;

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      subst.unbind(trail.back());
      trail.pop_back();
    }
  }

  bool try_next_alternative() {
    ChoicePoint& cp = choices.back();
    while (cp.next_alternative < cp.alternatives.size()) {
      const Clause& clause = *cp.alternatives[cp.next_alternative++];
      const std::uint32_t scope = ++*scope_counter;
      if (unify_in_place(cp.goal.literal.goal_term(), rename(clause.head, scope),
                         subst, trail)) {
        GoalList list = cp.rest;
        for (auto it = clause.body.rbegin(); it != clause.body.rend(); ++it) {
          list = std::make_shared<const GoalNode>(GoalNode{
              Goal{rename(*it, scope), cp.goal.depth + 1, cp.body_ancestors},
              list});
        }
        goals = std::move(list);
        return true;
      }
      undo_to(cp.trail_mark);
    }
    choices.pop_back();
    return false;
  }

  bool backtrack() {
    while (!choices.empty()) {
      undo_to(choices.back().trail_mark);
      if (try_next_alternative()) return true;
    }
    return false;
  }

  bool finish_builtin(bool holds, const Goal& goal, bool ground,
                      const GoalList& rest) {
    if (goal.literal.negated) {
      if (!ground) {
        throw FlounderError("negated builtin is not ground when selected: " +
                            goal.literal.to_string());
      }
      holds = !holds;
    }
    if (holds) goals = rest;
    return holds;
  }

  bool step(const Goal& goal, const GoalList& rest) {
    if (const auto* ne = std::get_if<Inequality>(&goal.literal.body)) {
      Term lhs = subst.apply(ne->lhs);
      Term rhs = subst.apply(ne->rhs);
      const bool holds = !unify(lhs, rhs).has_value();
      return finish_builtin(holds, goal, lhs.is_ground() && rhs.is_ground(),
                            rest);
    }
    if (const auto* lt = std::get_if<TermLess>(&goal.literal.body)) {
      Term lhs = subst.apply(lt->lhs);
      Term rhs = subst.apply(lt->rhs);
      const bool holds = compare_terms(lhs, rhs) < 0;
      return finish_builtin(holds, goal, lhs.is_ground() && rhs.is_ground(),
                            rest);
    }

    const Term& term = goal.literal.goal_term();
    if (goal.literal.negated) {
      Term call = subst.apply(term);
      if (!call.is_ground()) {
        throw FlounderError("negated goal is not ground when selected: \\+ " +
                            call.to_string());
      }
      Solver inner(*db, {Literal::goal(std::move(call))}, options,
                   goal.depth + 1, scope_counter);
      if (inner.next().has_value()) return false;
      goals = rest;
      return true;
    }

    const PredicateKey key = key_of(term);
    AncestorList body_ancestors = goal.ancestors;
    if (db->is_loop_checked(key)) {
      const Term call = subst.apply(term);
      for (const Ancestor* a = goal.ancestors.get(); a != nullptr;
           a = a->parent.get()) {
        if (is_variant(subst.apply(a->call), call)) return false;
      }
      body_ancestors = std::make_shared<const Ancestor>(Ancestor{term, goal.ancestors});
    }
    choices.push_back(ChoicePoint{goal, rest, db->clauses_for(key), 0,
                                  trail.size(), std::move(body_ancestors)});
    return try_next_alternative();
  }
};

Solver::Solver(const ClauseDatabase& db, std::vector<Literal> goals,
               SolveOptions options)
    : Solver(db, std::move(goals), options, 0,
             std::make_shared<std::uint32_t>(0)) {}

Solver::Solver(const ClauseDatabase& db, std::vector<Literal> goals,
               SolveOptions options, std::size_t base_depth,
               std::shared_ptr<std::uint32_t> scope_counter)
    : state_(std::make_unique<State>()) {
  state_->db = &db;
  state_->options = options;
  state_->scope_counter = std::move(scope_counter);
  for (const auto& literal : goals) {
    literal.collect_variables(state_->query_variables);
  }
  GoalList list;
  for (auto it = goals.rbegin(); it != goals.rend(); ++it) {
    list = std::make_shared<const GoalNode>(
        GoalNode{Goal{std::move(*it), base_depth, nullptr}, list});
  }
  state_->goals = std::move(list);
}

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

const std::vector<Variable>& Solver::query_variables() const noexcept {
  return state_->query_variables;
}

std::optional<Substitution> Solver::next() {
  State& s = *state_;
  if (s.exhausted) return std::nullopt;
  if (s.started && !s.backtrack()) {
    s.exhausted = true;
    return std::nullopt;
  }
  s.started = true;
  while (true) {
    if (!s.goals) return s.subst.restricted_to(s.query_variables);
    const GoalNode& node = *s.goals;
    const Goal goal = node.goal;
    const GoalList rest = node.next;
    if (goal.depth > s.options.max_depth) {
      throw DepthLimitError("resolution depth exceeded " +
                            std::to_string(s.options.max_depth) + " at goal " +
                            goal.literal.to_string());
    }
    if (!s.step(goal, rest) && !s.backtrack()) {
      s.exhausted = true;
      return std::nullopt;
    }
  }
}

std::vector<Substitution> solve_all(const ClauseDatabase& db,
                                    std::vector<Literal> goals,
                                    SolveOptions options) {
  Solver solver(db, std::move(goals), options);
  std::vector<Substitution> out;
  while (auto solution = solver.next()) out.push_back(std::move(*solution));
  return out;
}

std::vector<Term> findall(const Term& template_term, std::vector<Literal> goals,
                          const ClauseDatabase& db, SolveOptions options) {
  Solver solver(db, std::move(goals), options);
  std::vector<Term> out;
  while (auto solution = solver.next()) {
    out.push_back(solution->apply(template_term));
  }
  return out;
}

}  // namespace fallacy::logic
