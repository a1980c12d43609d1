#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coughlab/audio.hpp"

namespace coughlab::folds {

using audio::Label;

struct SubjectRecord {
    std::string subject_id;
    std::size_t cough_count = 0;
    std::vector<std::string> sample_ids;
    Label label = Label::CovidCough;
};

using LabeledSample = std::pair<std::string, Label>;

struct FoldAssignment {
    std::size_t n_folds = 10;
    std::map<std::string, std::size_t> fold_of;
    std::vector<std::vector<LabeledSample>> per_fold_samples;

    std::size_t count(std::size_t fold, bool cough) const;
};

struct SplitPlan {
    std::size_t rotation = 0;
    std::vector<std::size_t> train_folds;
    std::vector<std::size_t> val_folds;
    std::vector<std::size_t> test_folds;
};

struct IncrementSchedule {
    std::vector<std::vector<std::size_t>> steps;
};

class PoolExhausted : public std::runtime_error {
public:
    PoolExhausted(std::size_t needed, std::size_t available)
        : std::runtime_error("non-cough pool exhausted: need " + std::to_string(needed) +
                             ", have " + std::to_string(available) + " (shortfall " +
                             std::to_string(needed - available) + ")"),
          needed_(needed), available_(available) {}
    std::size_t needed() const noexcept { return needed_; }
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t needed_, available_;
};

/// Groups cough sample ids by subject in first-seen order.
std::vector<SubjectRecord> group_by_subject(
    const std::vector<std::pair<std::string, std::string>>& subject_and_sample, Label label);

/// Serpentine assignment: subjects sorted by descending cough count (ties by
/// ascending id); pass p walks folds 0..n-1 when p is even, n-1..0 when odd.
FoldAssignment snaking_assign(std::vector<SubjectRecord> subjects, std::size_t n_folds = 10);

/// Keeps at most `cap` cough samples per fold (seeded, order-preserving).
/// cap == 0 disables the cap.
FoldAssignment cap_fold_coughs(FoldAssignment assignment, std::size_t cap, std::uint64_t seed);

/// Adds to each fold as many non-cough samples as it holds coughs, drawn
/// without replacement from the pool; draws never repeat across folds.
FoldAssignment balance_noncough(FoldAssignment assignment, const std::vector<std::string>& noncough_pool,
                                std::uint64_t seed);

/// Rotation r: test {r, r+1}, val {r+2, r+3}, train the other six (mod 10).
std::vector<SplitPlan> rotational_splits(std::size_t n_folds = 10);
SplitPlan rotational_split(std::size_t rotation, std::size_t n_folds = 10);

/// Cumulative train folds in ascending index order.
IncrementSchedule increment_schedule(const SplitPlan& plan);

/// Samples of the given folds, in fold order.
std::vector<LabeledSample> gather(const FoldAssignment& assignment, const std::vector<std::size_t>& folds);

}  // namespace coughlab::folds
