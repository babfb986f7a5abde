#include "bidisc/radial.hpp"

#include "bidisc/error.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace bidisc {

std::string_view to_string(LimitStatus status) noexcept {
    switch (status) {
    case LimitStatus::converged: return "converged";
    case LimitStatus::infinite: return "infinite";
    case LimitStatus::not_converged: return "not_converged";
    }
    return "unknown";
}

double schedule_defect(int k) { return std::ldexp(1.0, -k); }
double schedule_t(int k) { return 1.0 - std::ldexp(1.0, -k); }

namespace {

double aitken(double a, double b, double c) {
    const double d1 = b - a;
    const double d2 = c - b;
    const double den = d2 - d1;
    if (den == 0.0 || !std::isfinite(den)) {
        return c;
    }
    const double step = d2 * d2 / den;
    // A huge correction means the tail is not geometric; keep the raw value.
    if (!std::isfinite(step) || std::abs(step) > 1e3 * std::abs(d2)) {
        return c;
    }
    return c - step;
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

} // namespace

LimitEstimate analyse_sequence(const std::vector<double>& v, const LimitOptions& o) {
    LimitEstimate out;
    const std::size_t n = v.size();
    out.samples_used = static_cast<int>(n);
    if (n < 3) {
        out.status = LimitStatus::not_converged;
        out.value = n ? v.back() : std::numeric_limits<double>::quiet_NaN();
        out.diagnostic = "fewer than three samples";
        return out;
    }
    std::vector<double> acc(n);
    acc[0] = v[0];
    acc[1] = v[1];
    for (std::size_t i = 2; i < n; ++i) {
        acc[i] = aitken(v[i - 2], v[i - 1], v[i]);
    }

    int small_run = 0;
    int escape_run = 0;
    int log_run = 0;
    for (std::size_t i = 3; i < n; ++i) {
        const double inc = std::abs(acc[i] - acc[i - 1]);
        out.last_delta = inc;
        if (inc <= o.tolerance * std::max(1.0, std::abs(acc[i]))) {
            if (++small_run >= o.window) {
                out.status = LimitStatus::converged;
                out.value = acc[i];
                out.samples_used = static_cast<int>(i + 1);
                return out;
            }
        } else {
            small_run = 0;
        }

        const double d = v[i] - v[i - 1];
        const double d_prev = v[i - 1] - v[i - 2];
        if (std::abs(v[i]) > o.divergence_threshold && sign_of(d) == sign_of(v[i]) && d != 0.0) {
            ++escape_run;
        } else {
            escape_run = 0;
        }
        const bool steady_growth = d != 0.0 && sign_of(d) == sign_of(d_prev) && d / d_prev >= 0.99 &&
                                   std::abs(d) > 100.0 * o.tolerance * std::max(1.0, std::abs(v[i]));
        log_run = steady_growth ? log_run + 1 : 0;
    }
    // Divergence counts only when the pattern runs to the last sample: a
    // quantity can drift steadily for a while and still settle later.
    if (escape_run >= o.divergence_run || log_run >= o.log_divergence_run) {
        const double d = v[n - 1] - v[n - 2];
        out.status = LimitStatus::infinite;
        out.value = sign_of(d) * std::numeric_limits<double>::infinity();
        out.diagnostic = escape_run >= o.divergence_run ? "escaped past the divergence threshold"
                                                        : "increments do not decay";
        return out;
    }
    out.status = LimitStatus::not_converged;
    out.value = acc[n - 1];
    if (out.diagnostic.empty()) {
        out.diagnostic = "accelerated increments stayed above tolerance";
    }
    return out;
}

namespace {

template <class T, class F>
std::vector<T> sample(const F& h, const LimitOptions& o, std::string& stop_reason) {
    std::vector<T> values;
    for (int k = o.k_min; k <= o.k_max; ++k) {
        try {
            const T value = h(schedule_defect(k));
            if (!std::isfinite(std::abs(value))) {
                stop_reason = "non-finite sample at k=" + std::to_string(k);
                break;
            }
            values.push_back(value);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::domain) {
                throw;
            }
            stop_reason = "domain error at k=" + std::to_string(k) + ": " + e.what();
            break;
        }
    }
    return values;
}

} // namespace

LimitEstimate radial_limit_defect(const std::function<double(double)>& h, const LimitOptions& o) {
    std::string stop;
    const auto values = sample<double>(h, o, stop);
    LimitEstimate out = analyse_sequence(values, o);
    if (!stop.empty() && out.status == LimitStatus::not_converged) {
        out.diagnostic = stop;
    }
    return out;
}

LimitEstimate radial_limit(const std::function<double(double)>& h, const LimitOptions& o) {
    return radial_limit_defect([&](double s) { return h(1.0 - s); }, o);
}

ComplexLimit radial_limit_complex(const std::function<Complex(double)>& h, const LimitOptions& o) {
    std::string stop;
    const auto values = sample<Complex>(h, o, stop);
    std::vector<double> re(values.size());
    std::vector<double> im(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        re[i] = values[i].real();
        im[i] = values[i].imag();
    }
    ComplexLimit out{Complex{}, analyse_sequence(re, o), analyse_sequence(im, o)};
    if (!stop.empty()) {
        for (LimitEstimate* e : {&out.re, &out.im}) {
            if (e->status == LimitStatus::not_converged) {
                e->diagnostic = stop;
            }
        }
    }
    out.value = Complex{out.re.value, out.im.value};
    return out;
}

} // namespace bidisc
