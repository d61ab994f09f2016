#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsc/agent/checkpoint.hpp"
#include "bsc/run/metrics.hpp"
#include "bsc/run/run_config.hpp"

namespace bsc {

/// Worker-count cap: min(hardware, BSC_THREADS when set, job count).
int worker_count(int jobs);

/// One heuristic-driven episode over `week`.
EpisodeMetrics run_heuristic_episode(const RunConfig& rc, const OrderStream& week,
                                     const StrategyConfig& strategy, bool interrupt,
                                     std::ostream* trace = nullptr,
                                     std::function<void(const SimEvent&, const WarehouseState&)>
                                         observer = {});

/// One deterministic (argmax) policy episode over `week`.
EpisodeMetrics run_policy_episode(const RunConfig& rc, const OrderStream& week,
                                  const AgentCheckpoint& ckpt, bool interrupt,
                                  std::ostream* trace = nullptr);

struct SweepCell {
  StrategyKind kind = StrategyKind::Fixed;
  std::string param_name;  // "th_upper" or "th_lower"; empty for opportunity
  double param_value = 0.0;
  bool interrupt = false;
};

struct SweepRow {
  SweepCell cell;
  EpisodeMetrics metrics;
};

/// Grid run over one order stream, fanned out across worker threads. Rows come
/// back grouped by interrupt setting and sorted by average service time.
std::vector<SweepRow> run_sweep(const RunConfig& rc, const OrderStream& week,
                                const std::vector<SweepCell>& grid);

/// Default grid: fixed and highlow over th_upper in {30..100 step 10} plus
/// opportunity, each with interrupt off and on.
std::vector<SweepCell> default_sweep_grid();

struct EvalRow {
  std::string week;  // file name or "mean"
  EpisodeMetrics metrics;
};

/// Deterministic-policy evaluation over several weeks (parallel), plus an
/// aggregate row of column means.
std::vector<EvalRow> run_evaluation(const RunConfig& rc, const AgentCheckpoint& ckpt,
                                    const std::vector<std::string>& week_paths, bool interrupt);

std::string sweep_table_csv(const std::vector<SweepRow>& rows);
std::string eval_table_csv(const std::vector<EvalRow>& rows);

}  // namespace bsc
