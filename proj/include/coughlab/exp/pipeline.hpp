#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "coughlab/exp/config.hpp"
#include "coughlab/transfer.hpp"

namespace coughlab::exp {

enum class Stage { Synth, Segment, Featurize, Folds, TrainBase, Transfer, Report };

inline constexpr Stage kStages[] = {Stage::Synth,     Stage::Segment,  Stage::Featurize, Stage::Folds,
                                    Stage::TrainBase, Stage::Transfer, Stage::Report};

std::string_view stage_name(Stage stage);
std::optional<Stage> parse_stage(std::string_view name);

class StageError : public std::runtime_error {
public:
    StageError(Stage stage, const std::string& what)
        : std::runtime_error(std::string(stage_name(stage)) + ": " + what), stage_(stage) {}
    Stage stage() const noexcept { return stage_; }

private:
    Stage stage_;
};

struct StageOutcome {
    Stage stage;
    bool skipped = false;
    double seconds = 0.0;
    std::string key;          // hash of the stage inputs
    std::string output_hash;  // hash of the stage outputs
};

/// Rows of fig4_box.csv: model_pair, rotation, accuracy (mean over seeds).
struct BoxRow {
    std::string model_pair;
    std::size_t rotation = 0;
    double accuracy = 0.0;
};

/// Runs pipeline stages against one output directory. Every stage writes a
/// stamp (input key + output hash) next to its outputs and is skipped when a
/// rerun finds both unchanged.
class Pipeline {
public:
    explicit Pipeline(ExperimentConfig cfg);

    /// Runs every stage up to and including `last` in order.
    std::vector<StageOutcome> run_until(Stage last);
    StageOutcome run_stage(Stage stage);

    const ExperimentConfig& config() const { return cfg_; }
    std::filesystem::path stage_dir(Stage stage) const;

private:
    StageOutcome execute(Stage stage);
    std::string stage_key(Stage stage) const;
    void do_synth();
    void do_segment();
    void do_featurize();
    void do_folds();
    void do_train_base();
    void do_transfer();

    ExperimentConfig cfg_;
    std::vector<StageOutcome> outcomes_;
};

/// cmd_run: all stages, then report.json / report.csv. On failure writes a
/// partial report.json naming the failed stage and rethrows.
std::vector<StageOutcome> run_experiment(const ExperimentConfig& cfg);

/// Builds fig4_box.csv, fig5_gap.csv, report.csv and report.json from the
/// artifacts under `out`. `outcomes` (may be empty) supplies stage timings.
/// Throws std::runtime_error listing missing artifacts.
nlohmann::json write_report(const std::filesystem::path& out, const std::vector<StageOutcome>& outcomes);

/// Human-readable summary of report.json.
std::string summarize_report(const nlohmann::json& report);

/// Reads fig4 rows (model_pair order H-H, H-C, C-C; rotations ascending).
std::vector<BoxRow> box_rows(const std::filesystem::path& out);

/// Model spec of the proxy base described by `cfg` (conv/pool stages, Flatten,
/// dense layers, classifier, Softmax).
nn::ModelSpec proxy_spec(const ExperimentConfig& cfg);

/// The H2C plan: fresh binary head replacing the I2H head and a conv block
/// inserted before Flatten (or the configured position).
transfer::TransferPlan h2c_plan(const ExperimentConfig& cfg, const nn::ModelSpec& i2h_spec);
transfer::TransferPlan base_plan(const ExperimentConfig& cfg, const nn::TrainConfig& train);

}  // namespace coughlab::exp
