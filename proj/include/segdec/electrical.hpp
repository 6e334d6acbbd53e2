#pragma once

#include <array>
#include <cmath>
#include <string>

#include "segdec/errors.hpp"
#include "segdec/glyphs.hpp"

namespace segdec {

/// Drive parameters for one segment LED. Defaults model a common LED:
/// 2 V forward drop at 20 mA.
struct led_spec {
    double supply_voltage;
    double forward_voltage = 2.0;
    double forward_current = 0.020;

    constexpr led_spec(double supply, double vf = 2.0, double amps = 0.020)
        : supply_voltage(supply), forward_voltage(vf), forward_current(amps)
    {
        if (forward_voltage <= 0.0)
            throw domain_error("forward voltage must be positive");
        if (forward_current <= 0.0)
            throw domain_error("forward current must be positive");
        if (supply_voltage < forward_voltage)
            throw domain_error("supply voltage below forward voltage; LED cannot be forward-biased");
    }
};

/// Series current-limiting resistor, in ohms: (Vs - Vf) / If.
constexpr double resistor_value(led_spec const& spec)
{
    if (spec.supply_voltage < spec.forward_voltage)
        throw domain_error("supply voltage below forward voltage; LED cannot be forward-biased");
    return (spec.supply_voltage - spec.forward_voltage) / spec.forward_current;
}

/// Rounds up to the nearest E12 preferred value (safe side: current stays
/// at or below the target). Zero stays zero.
inline double e12_resistor(double ohms)
{
    if (ohms <= 0.0)
        return 0.0;
    constexpr std::array<double, 12> series = {1.0, 1.2, 1.5, 1.8, 2.2, 2.7,
                                               3.3, 3.9, 4.7, 5.6, 6.8, 8.2};
    double decade = std::pow(10.0, std::floor(std::log10(ohms)));
    for (int pass = 0; pass < 2; ++pass) {
        for (double v : series) {
            double candidate = v * decade;
            if (candidate >= ohms * (1.0 - 1e-12))
                return candidate;
        }
        decade *= 10.0;
    }
    return decade; // unreachable for finite input
}

/// Per-digit drive summary under the uniform-segment model: every lit
/// segment draws the same forward current.
struct power_report {
    int digit;
    int lit_count;
    double total_current;   // amperes
    double total_led_power; // watts
};

inline power_report digit_current(int digit, display_mode mode, led_spec const& spec)
{
    int lit = decode(digit, mode).size();
    return {digit, lit, lit * spec.forward_current,
            lit * spec.forward_current * spec.forward_voltage};
}

/// Reports for all ten digits plus the spread of per-digit current.
struct power_summary {
    std::array<power_report, 10> digits;
    double min_current;
    double max_current;
    double max_min_ratio;
};

inline power_summary power_table(display_mode mode, led_spec const& spec)
{
    power_summary out{};
    out.min_current = out.max_current = 0.0;
    for (int d = 0; d < 10; ++d) {
        out.digits[d] = digit_current(d, mode, spec);
        double c = out.digits[d].total_current;
        if (d == 0 || c < out.min_current) out.min_current = c;
        if (d == 0 || c > out.max_current) out.max_current = c;
    }
    out.max_min_ratio = out.max_current / out.min_current;
    return out;
}

} // namespace segdec
