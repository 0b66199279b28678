#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dpclab/trs.hpp"

namespace dpclab {

constexpr size_t kDefaultBudget = 200000;

// One recorded rewrite step s ->(p, rule) t. The substitution is stored so
// the step can be revalidated by recomputation.
struct RewriteStep {
    Term source;
    Position redex;
    int rule_index;
    Substitution subst;
    Term target;
};

bool validate_step(const Trs& trs, const RewriteStep& step);

struct Derivation {
    Term initial;
    std::vector<RewriteStep> steps;

    Term final_term() const { return steps.empty() ? initial : steps.back().target; }
    size_t length() const { return steps.size(); }
    // term t_i, 1-based: t_1 = initial, t_{i} = target of step i-1
    Term term(int i) const {
        return i <= 1 ? initial : steps[static_cast<size_t>(i - 2)].target;
    }
    int term_count() const { return static_cast<int>(steps.size()) + 1; }
};

bool validate_derivation(const Trs& trs, const Derivation& d);

// All single steps from t in (position-lex, rule-index) order.
// Empty iff t is a normal form.
std::vector<RewriteStep> one_step_reducts(const Trs& trs, Term t);

// The step at an explicit redex position with an explicit rule, if the rule
// matches there.
std::optional<RewriteStep> step_at(const Trs& trs, Term t, const Position& p, int rule_index);

bool is_normal_form(const Trs& trs, Term t);

// Exact derivation heights by memoized search over the reachability graph.
// NonTerminating on a reachable cycle, BudgetExceeded past the state cap.
// Engines cache results across calls for one fixed system.
class HeightEngine {
  public:
    explicit HeightEngine(const Trs& trs);
    ~HeightEngine();
    long long height(Term t, size_t budget = kDefaultBudget);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Maximal number of strict steps in any (strict ∪ weak)-derivation: the
// reachable graph is built, weak-only strongly connected components are
// contracted, and the longest path counts strict edges as 1, weak as 0.
// NonTerminatingRelative if a strict edge lies on a reachable cycle.
class RelativeHeightEngine {
  public:
    RelativeHeightEngine(const Trs& strict, const Trs& weak);
    ~RelativeHeightEngine();
    long long height(Term t, size_t budget = kDefaultBudget);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

long long derivation_height(const Trs& trs, Term t, size_t budget = kDefaultBudget);
long long relative_derivation_height(const Trs& strict, const Trs& weak, Term t,
                                     size_t budget = kDefaultBudget);

// pdp / psz: maximum depth resp. size over the full reachability set.
long long potential_depth(const Trs& trs, Term t, size_t budget = kDefaultBudget);
long long potential_size(const Trs& trs, Term t, size_t budget = kDefaultBudget);

enum class Strategy { LeftmostInnermost, LeftmostOutermost };

Derivation derive(const Trs& trs, Term t, Strategy strategy, size_t max_steps);

// Seeded random ground term / derivation generation. Only rng() modulo is
// used so results are identical across platforms.
Term random_ground_term(const std::map<std::string, int>& signature, int max_size,
                        std::mt19937_64& rng);
Derivation random_derivation(const Trs& trs, Term start, int max_steps, std::mt19937_64& rng);

// Trace file format: one term per line, with "@<pos> #<rule-index>" between
// consecutive terms. Terms are parsed as ground; every step is revalidated.
Derivation parse_trace(std::string_view text, const Trs& trs);
std::string print_trace(const Derivation& d);

}  // namespace dpclab
