// Walkthrough of the library: draw the ten numerals, re-derive the segment
// expressions, compile the decoder to gates and size the LED resistor.

#include <iostream>
#include <vector>

#include "segdec/segdec.hpp"

int main()
{
    using namespace segdec;

    std::vector<segment_set> digits;
    for (int d = 0; d < 10; ++d)
        digits.push_back(decode(d, display_mode::bengali));
    std::cout << render_text_row(digits) << "\n\n";

    std::cout << "minimal segment functions (inputs 10..15 free):\n";
    for (segment_id s : all_segments()) {
        sop_expr expr = minimize({minterm_mask(s), decoder_dc_mask});
        std::cout << "  " << label(s) << " = " << print_sop(expr) << '\n';
    }

    std::vector<std::pair<std::string, sop_expr>> named;
    auto exprs = paper_expressions();
    for (segment_id s : all_segments())
        named.emplace_back(std::string(1, label(s)), exprs[ordinal(s)]);
    gate_stats decoder = stats(compile_decoder(named));
    std::cout << "\ndecoder gate count: " << decoder.total << " ("
              << decoder[gate_kind::inv] << " shared inverters)\n";

    led_spec spec(5.0);
    std::cout << "series resistor at 5 V: " << resistor_value(spec) << " ohm\n";
    power_summary power = power_table(display_mode::bengali, spec);
    std::cout << "worst-case digit current: " << power.max_current * 1e3 << " mA\n";
    return 0;
}
