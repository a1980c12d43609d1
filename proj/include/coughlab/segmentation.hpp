#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coughlab/audio.hpp"

namespace coughlab::seg {

/// Frame-wise RMS energy of a clip.
struct EnergyEnvelope {
    std::vector<double> frame_energies;
    std::size_t frame_len = 0;
    std::size_t hop = 0;
    int source_rate = 0;
    std::size_t clip_length = 0;
};

struct Segment {
    std::size_t start_sample = 0;
    std::size_t end_sample = 0;  // exclusive
    double peak_energy = 0.0;
    std::optional<std::size_t> burst_end_sample;

    std::size_t length() const { return end_sample - start_sample; }
};

struct SegmentationConfig {
    std::size_t frame_len = 1024;
    std::size_t hop = 256;
    double t_high = 0.25;  // fraction of peak energy that opens a segment
    double t_low = 0.10;   // fraction of peak energy that keeps it open
    double min_dur = 0.05;    // seconds
    double merge_gap = 0.05;  // seconds
    std::size_t phase_frame = 256;
};

EnergyEnvelope energy_envelope(std::span<const float> samples, int sample_rate,
                               std::size_t frame_len, std::size_t hop);
EnergyEnvelope energy_envelope(const audio::AudioClip& clip, std::size_t frame_len, std::size_t hop);

/// Hysteresis detector. A segment is a maximal run of frames at or above
/// t_low * peak that contains at least one frame at or above t_high * peak.
/// Segments closer than merge_gap are merged, then those shorter than
/// min_dur are dropped.
std::vector<Segment> detect_segments(const EnergyEnvelope& env, double t_high, double t_low,
                                     double min_dur, double merge_gap);

/// Splits a segment into burst [start, burst_end) and decay [burst_end, end)
/// at the end of its loudest short-time frame (ties go to the earliest).
Segment classify_phase(const audio::AudioClip& clip, const Segment& seg,
                       std::size_t frame_len = 256, std::size_t hop = 256);

/// Envelope, detection and phase annotation with one config.
std::vector<Segment> segment_clip(const audio::AudioClip& clip, const SegmentationConfig& cfg = {});

}  // namespace coughlab::seg
