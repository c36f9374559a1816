#pragma once

// Exhaustive sweeps that check the structural statements about annexes and
// parallel reflections.  Each statement keeps separate counts for instances
// whose hypotheses hold (and then pass or fail) and for skipped ones.

#include <deque>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alcove/boundary.hpp"
#include "alcove/group.hpp"

namespace alcove {

struct StatementReport {
  std::string name;
  long instances = 0;  // hypotheses held
  long passed = 0;
  long skipped = 0;    // hypotheses failed
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  template <typename KeyFn>
  void record(Outcome o, KeyFn&& key) {
    switch (o) {
      case Outcome::HypothesisUnmet: ++skipped; return;
      case Outcome::Holds: ++instances; ++passed; return;
      case Outcome::Fails: ++instances; failures.push_back(key()); return;
    }
  }
  template <typename KeyFn>
  void record(bool hypothesis, bool conclusion, KeyFn&& key) {
    record(!hypothesis ? Outcome::HypothesisUnmet : conclusion ? Outcome::Holds : Outcome::Fails,
           std::forward<KeyFn>(key));
  }
};

class Report {
 public:
  /// The named statement, appended on first use.
  StatementReport& statement(std::string_view name);
  const StatementReport* find(std::string_view name) const;
  const std::deque<StatementReport>& statements() const { return statements_; }

  void merge(const Report& other);
  long failure_count() const;
  bool ok() const { return failure_count() == 0; }

 private:
  std::deque<StatementReport> statements_;
};

/// The descent-propagation statements for one sequence (w, i, r1..rn), each
/// gated on its own hypotheses.
Report verify_descent_propagation(const GroupContext& ctx, const DaggerInstance& inst);

/// Coset and strip statements over every element of length <= max_length.
/// Plane types only.
Report structural_checks(const GroupContext& ctx, int max_length);

Report sweep_pm1(const GroupContext& ctx, int max_length);
/// Sequences of 2..max_n walls from either wall of w's strip, kept when
/// property (dagger) holds; the produced element must be a boundary member.
Report sweep_dagger(const GroupContext& ctx, int max_length, int max_n);
/// predicted_boundary output must be boundary members of annex(w).
Report sweep_main_theorem(const GroupContext& ctx, int max_length, int max_n);
Report sweep_descent(const GroupContext& ctx, int max_length, int max_n);

/// Annex enumeration within the safety cap, and membership against the
/// subword oracle on members and their neighbours.
Report sweep_annex(const GroupContext& ctx, int max_length);
Report sweep_boundary_types(const GroupContext& ctx, int max_length);
Report sweep_product(const GroupContext& ctx, int max_length);
Report sweep_symmetry(const GroupContext& ctx, int max_length);
Report sweep_closure(const GroupContext& ctx, int max_length);
Report sweep_three_parallel(const GroupContext& ctx, Int min_level, Int max_level);
/// Length and barycenter halfspace criteria agree for walls with |k| <= max_level.
Report sweep_halfspace(const GroupContext& ctx, int max_length, Int max_level);

/// Names accepted by run_verification, in display order.
const std::vector<std::string>& verification_names();
/// Dispatches by name.  Throws PreconditionError for an unknown name.
Report run_verification(const GroupContext& ctx, std::string_view name, int max_length, int max_n);

}  // namespace alcove
