#pragma once

// The radial-limit engine. Every boundary limit in the library is sampled on
// the shared schedule t_k = 1 - 2^-k, k = 4..48, and accelerated with Aitken's
// delta-squared process.

#include "bidisc/disc.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bidisc {

enum class LimitStatus { converged, infinite, not_converged };

std::string_view to_string(LimitStatus status) noexcept;

struct LimitEstimate {
    double value = 0.0; // +/-inf when status == infinite
    LimitStatus status = LimitStatus::not_converged;
    int samples_used = 0;
    double last_delta = 0.0; // last accelerated increment
    std::string diagnostic;

    bool converged() const noexcept { return status == LimitStatus::converged; }
    bool infinite() const noexcept { return status == LimitStatus::infinite; }
};

struct LimitOptions {
    double tolerance = 1e-8;
    int k_min = 4;
    int k_max = 48;
    int window = 3;                     // consecutive small increments required
    double divergence_threshold = 1e8;  // raw escape level
    int divergence_run = 5;             // monotone samples past the threshold
    int log_divergence_run = 6;         // increments with ratio >= 0.99
};

/// t_k = 1 - 2^-k.
double schedule_t(int k);
/// 2^-k, the distance of t_k to 1.
double schedule_defect(int k);

/// Limit of h as the defect s = 1 - t runs through 2^-k. Evaluation may
/// throw a domain Error; sampling then stops and the verdict uses what was
/// gathered so far.
LimitEstimate radial_limit_defect(const std::function<double(double)>& h, const LimitOptions& options = {});

/// Limit of h(t) as t -> 1 along the schedule.
LimitEstimate radial_limit(const std::function<double(double)>& h, const LimitOptions& options = {});

/// Analyse an explicit sequence indexed from k_min (values[i] belongs to k_min + i).
LimitEstimate analyse_sequence(const std::vector<double>& values, const LimitOptions& options = {});

struct ComplexLimit {
    Complex value;
    LimitEstimate re;
    LimitEstimate im;

    bool converged() const noexcept { return re.converged() && im.converged(); }
};

/// Componentwise limit of a complex-valued function of the defect.
ComplexLimit radial_limit_complex(const std::function<Complex(double)>& h, const LimitOptions& options = {});

} // namespace bidisc
