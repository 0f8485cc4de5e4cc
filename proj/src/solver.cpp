// Copyright 2026 The sfc-design Authors
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

#include "sfc/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "steiner.hpp"

namespace sfc {

namespace {

using Clock = std::chrono::steady_clock;
using detail::kUnreachable;

// Per request node, which domains are still possible (0-based domains).
// Cost only depends on the domains used, so nodes of one type inside one
// domain are interchangeable and the search runs at domain granularity.
using DomainSets = std::vector<std::vector<char>>;

enum class Phase {
  Improve,     // classic branch and bound towards the optimum
  LexFirst,    // first assignment, in lexicographic node order, of a known cost
  FirstFound,  // any admissible assignment
};

constexpr int kTypeSlots = 6;

class Search {
 public:
  Search(const ConstraintModel& model, Clock::time_point deadline)
      : model_(model),
        graph_(model.graph()),
        n_(model.variable_count()),
        m_(model.graph().domain_count()),
        root_(model.source_domain() - 1),
        deadline_(deadline),
        metric_(model.graph()),
        steiner_(metric_) {
    candidates_.assign(static_cast<std::size_t>(n_), std::vector<std::vector<NodeId>>(static_cast<std::size_t>(m_)));
    type_.resize(static_cast<std::size_t>(n_));
    capacity_.assign(kTypeSlots * static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < n_; ++i) {
      type_[static_cast<std::size_t>(i)] = type_code(model.request_tree().type(i));
      for (NodeId v : model.assignment_domain(i))
        candidates_[static_cast<std::size_t>(i)][static_cast<std::size_t>(graph_.node(v).domain - 1)].push_back(v);
      for (int d = 0; d < m_; ++d) {
        int& cap = capacity_[slot(type_[static_cast<std::size_t>(i)], d)];
        cap = std::max(cap, static_cast<int>(candidates_[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)].size()));
      }
    }
    for (const CountBound& b : model.count_bounds()) {
      const std::size_t s = slot(type_code(b.type), b.domain - 1);
      capacity_[s] = std::min(capacity_[s], b.max_count);
      if (b.min_count > 0) minima_.push_back({b.domain - 1, type_code(b.type), b.min_count});
    }
    counts_.assign(kTypeSlots * static_cast<std::size_t>(m_), 0);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool timed_out() const { return timed_out_; }
  Cost best() const { return best_; }
  const std::vector<int>& best_domains() const { return best_domains_; }

  /// Runs one search pass. Returns false when the root is infeasible.
  bool run(Phase phase, Cost target) {
    phase_ = phase;
    target_ = target;
    found_ = false;
    DomainSets root(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(m_), 0));
    for (int i = 0; i < n_; ++i)
      for (int d = 0; d < m_; ++d)
        root[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
            !candidates_[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)].empty();
    if (!propagate(root)) return false;
    const Cost b = bound(root);
    if (b >= kUnreachable) return false;
    dfs(root, b);
    return true;
  }

  bool found() const { return found_; }

  SfcTree build_tree(const std::vector<int>& domains) {
    SfcTree t;
    t.root = graph_.gateway(root_ + 1);
    std::vector<int> terminals;
    for (int i = 0; i < n_; ++i) {
      const int d = domains[static_cast<std::size_t>(i)];
      const NodeId v = canonical_node(domains, i, d);
      t.assignment.push_back(v);
      t.intra_arcs.push_back({graph_.gateway(d + 1), v, 0});
      terminals.push_back(d);
    }
    std::sort(t.intra_arcs.begin(), t.intra_arcs.end());
    auto [cost, arcs] = steiner_.arborescence(root_, terminals);
    for (auto [a, b] : arcs)
      t.gateway_arcs.push_back({graph_.gateway(a + 1), graph_.gateway(b + 1), graph_.inter_cost(a + 1, b + 1).value()});
    std::sort(t.gateway_arcs.begin(), t.gateway_arcs.end());
    return t;
  }

 private:
  struct Minimum {
    int domain;
    int type;
    int count;
  };

  std::size_t slot(int type, int d) const {
    return static_cast<std::size_t>(type) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(d);
  }

  static int single(const std::vector<char>& set) {
    int found = -1;
    for (std::size_t d = 0; d < set.size(); ++d) {
      if (!set[d]) continue;
      if (found >= 0) return -2;
      found = static_cast<int>(d);
    }
    return found;
  }

  // The k-th smallest candidate of the domain, k counting earlier request
  // nodes of the same type placed there: the lexicographically smallest
  // injective node assignment realizing a domain assignment.
  NodeId canonical_node(const std::vector<int>& domains, int i, int d) const {
    std::size_t k = 0;
    for (int j = 0; j < i; ++j)
      if (type_[static_cast<std::size_t>(j)] == type_[static_cast<std::size_t>(i)] &&
          domains[static_cast<std::size_t>(j)] == d)
        ++k;
    const auto& list = candidates_[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
    return k < list.size() ? list[k] : 0;
  }

  bool propagate(DomainSets& sets) {
    std::vector<int> fixed(static_cast<std::size_t>(n_));
    for (;;) {
      std::fill(counts_.begin(), counts_.end(), 0);
      for (int i = 0; i < n_; ++i) {
        const int d = single(sets[static_cast<std::size_t>(i)]);
        if (d == -1) return false;
        fixed[static_cast<std::size_t>(i)] = d;
        if (d >= 0) ++counts_[slot(type_[static_cast<std::size_t>(i)], d)];
      }
      for (std::size_t s = 0; s < counts_.size(); ++s)
        if (counts_[s] > capacity_[s]) return false;

      bool changed = false;
      for (int i = 0; i < n_; ++i) {
        if (fixed[static_cast<std::size_t>(i)] >= 0) continue;
        auto& set = sets[static_cast<std::size_t>(i)];
        for (int d = 0; d < m_; ++d) {
          if (set[static_cast<std::size_t>(d)] &&
              counts_[slot(type_[static_cast<std::size_t>(i)], d)] >= capacity_[slot(type_[static_cast<std::size_t>(i)], d)]) {
            set[static_cast<std::size_t>(d)] = 0;
            changed = true;
          }
        }
      }
      if (changed) continue;

      for (const Minimum& req : minima_) {
        int possible = counts_[slot(req.type, req.domain)];
        const int placed = possible;
        for (int i = 0; i < n_; ++i)
          if (fixed[static_cast<std::size_t>(i)] < 0 && type_[static_cast<std::size_t>(i)] == req.type &&
              sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(req.domain)])
            ++possible;
        if (possible < req.count) return false;
        if (possible == req.count && possible > placed) {
          for (int i = 0; i < n_; ++i) {
            auto& set = sets[static_cast<std::size_t>(i)];
            if (fixed[static_cast<std::size_t>(i)] >= 0 || type_[static_cast<std::size_t>(i)] != req.type ||
                !set[static_cast<std::size_t>(req.domain)])
              continue;
            std::fill(set.begin(), set.end(), 0);
            set[static_cast<std::size_t>(req.domain)] = 1;
          }
          changed = true;
        }
      }
      if (changed) continue;

      // Outstanding minima of a type cannot exceed its unplaced request nodes.
      for (int t = 1; t < kTypeSlots; ++t) {
        int need = 0;
        for (const Minimum& req : minima_)
          if (req.type == t) need += std::max(0, req.count - counts_[slot(t, req.domain)]);
        if (need == 0) continue;
        int open = 0;
        for (int i = 0; i < n_; ++i)
          if (fixed[static_cast<std::size_t>(i)] < 0 && type_[static_cast<std::size_t>(i)] == t) ++open;
        if (need > open) return false;
      }
      return true;
    }
  }

  Cost bound(const DomainSets& sets) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      for (int d = 0; d < m_; ++d)
        if (sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]) groups[static_cast<std::size_t>(i)].push_back(d);
    return steiner_.cost(root_, std::move(groups));
  }

  // Returns true when the search must stop.
  bool dfs(const DomainSets& sets, Cost lower) {
    ++nodes_;
    if (Clock::now() >= deadline_) {
      timed_out_ = true;
      return true;
    }

    int branch = -1;
    for (int i = 0; i < n_ && branch < 0; ++i)
      if (single(sets[static_cast<std::size_t>(i)]) == -2) branch = i;

    if (branch < 0) {
      std::vector<int> domains(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) domains[static_cast<std::size_t>(i)] = single(sets[static_cast<std::size_t>(i)]);
      switch (phase_) {
        case Phase::Improve:
          if (lower < best_) {
            best_ = lower;
            best_domains_ = std::move(domains);
            found_ = true;
          }
          return false;
        case Phase::LexFirst:
        case Phase::FirstFound:
          best_ = lower;
          best_domains_ = std::move(domains);
          found_ = true;
          return true;
      }
    }

    std::vector<int> prefix(static_cast<std::size_t>(branch));
    for (int j = 0; j < branch; ++j) prefix[static_cast<std::size_t>(j)] = single(sets[static_cast<std::size_t>(j)]);

    struct Child {
      Cost bound;
      NodeId key;
      DomainSets sets;
    };
    std::vector<Child> children;
    for (int d = 0; d < m_; ++d) {
      if (!sets[static_cast<std::size_t>(branch)][static_cast<std::size_t>(d)]) continue;
      DomainSets next = sets;
      std::fill(next[static_cast<std::size_t>(branch)].begin(), next[static_cast<std::size_t>(branch)].end(), 0);
      next[static_cast<std::size_t>(branch)][static_cast<std::size_t>(d)] = 1;
      if (!propagate(next)) continue;
      const Cost b = bound(next);
      if (b >= kUnreachable || pruned(b)) continue;
      children.push_back({b, canonical_node(prefix, branch, d), std::move(next)});
    }
    if (phase_ == Phase::LexFirst) {
      std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) { return a.key < b.key; });
    } else {
      std::sort(children.begin(), children.end(),
                [](const Child& a, const Child& b) { return a.bound < b.bound || (a.bound == b.bound && a.key < b.key); });
    }
    for (const Child& c : children) {
      if (pruned(c.bound)) continue;
      if (dfs(c.sets, c.bound)) return true;
    }
    return false;
  }

  bool pruned(Cost b) const {
    switch (phase_) {
      case Phase::Improve: return b >= best_;
      case Phase::LexFirst: return b > target_;
      case Phase::FirstFound: return false;
    }
    return false;
  }

  const ConstraintModel& model_;
  const NetworkGraph& graph_;
  int n_;
  int m_;
  int root_;
  Clock::time_point deadline_;
  detail::GatewayMetric metric_;
  detail::SteinerSolver steiner_;

  std::vector<std::vector<std::vector<NodeId>>> candidates_;  // [i][d]
  std::vector<int> type_;
  std::vector<int> capacity_;  // [type][d]
  std::vector<int> counts_;    // scratch, [type][d]
  std::vector<Minimum> minima_;

  Phase phase_ = Phase::Improve;
  Cost target_ = kUnreachable;
  Cost best_ = kUnreachable;
  std::vector<int> best_domains_;
  bool found_ = false;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_budget(Budget budget) {
  if (budget.count() <= 0) throw std::invalid_argument("solve: time budget must be positive");
}

}  // namespace

SolveOutcome solve_optimal(const ConstraintModel& model, Budget budget) {
  check_budget(budget);
  const auto start = Clock::now();
  SolveOutcome out;
  Search search(model, start + budget);

  const bool feasible_root = search.run(Phase::Improve, kUnreachable);
  if (search.timed_out()) {
    out.kind = OutcomeKind::Timeout;
    if (search.found()) out.tree = search.build_tree(search.best_domains());
  } else if (!feasible_root || search.best() >= kUnreachable) {
    out.kind = OutcomeKind::Unsat;
  } else {
    // Second pass: the lexicographically first assignment reaching the optimum.
    const std::vector<int> incumbent = search.best_domains();
    search.run(Phase::LexFirst, search.best());
    out.kind = OutcomeKind::Optimal;
    out.tree = search.build_tree(search.found() && !search.timed_out() ? search.best_domains() : incumbent);
  }
  out.stats.nodes_explored = search.nodes();
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

SolveOutcome solve_feasible(const ConstraintModel& model, Budget budget) {
  check_budget(budget);
  const auto start = Clock::now();
  SolveOutcome out;
  Search search(model, start + budget);
  search.run(Phase::FirstFound, kUnreachable);
  if (search.found()) {
    out.kind = OutcomeKind::Feasible;
    out.tree = search.build_tree(search.best_domains());
  } else {
    out.kind = search.timed_out() ? OutcomeKind::Timeout : OutcomeKind::Unsat;
  }
  out.stats.nodes_explored = search.nodes();
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

SolveOutcome solve_instance(const NetworkGraph& g, const BoundIntent& intent, SearchMode mode, Budget budget) {
  check_budget(budget);
  const auto start = Clock::now();
  const RequestTree tree = build_request_tree(intent.request);
  SolveOutcome out;
  try {
    const ConstraintModel model = compile(g, intent, tree);
    out = mode == SearchMode::Optimal ? solve_optimal(model, budget) : solve_feasible(model, budget);
  } catch (const EmptyDomainError&) {
    out.kind = OutcomeKind::Unsat;
  }
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

}  // namespace sfc
