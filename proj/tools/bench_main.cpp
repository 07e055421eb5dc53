// Benchmark: the OpenMP-parallel classification sweep against the serial
// reference implementation.  Asserts that both policies produce the
// identical report before printing timings; exits 1 on any difference.
//
// Usage: wbu-bench ["germ"] [bound]
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "wbu/classify.hpp"
#include "wbu/report_json.hpp"

int main(int argc, char** argv) {
    using namespace wbu;
    try {
        std::string germ_text = argc > 1 ? argv[1] : "xy + z^3 + u^4";
        i64 bound = argc > 2 ? std::atoll(argv[2]) : 20;
        GermModel g = parse_germ(germ_text);

        auto timed = [&](ExecutionPolicy policy, ClassificationReport& out) {
            auto t0 = std::chrono::steady_clock::now();
            out = classify_extractions(g, bound, policy);
            auto t1 = std::chrono::steady_clock::now();
            return std::chrono::duration<double>(t1 - t0).count();
        };

        ClassificationReport serial, parallel;
        double ts = timed(ExecutionPolicy::Serial, serial);
        double tp = timed(ExecutionPolicy::Parallel, parallel);
        bool identical = to_stable_string(classification_json(serial)) ==
                         to_stable_string(classification_json(parallel));

        std::cout << "germ: " << render_germ(g) << "\n";
        std::cout << "bound: " << bound << " (" << enumerate_weights(bound).size()
                  << " weight vectors)\n";
        std::cout << "accepted: " << serial.accepted.size() << "\n";
        std::cout << "serial:   " << ts << " s\n";
        std::cout << "parallel: " << tp << " s\n";
        std::cout << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "\n";
        std::cout << "reports identical: " << (identical ? "yes" : "NO") << "\n";
        return identical ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
