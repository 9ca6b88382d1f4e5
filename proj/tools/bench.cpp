// Times the parallel exact search against the serial reference on the
// full n = 8 census (max degree >= 3) plus seeded random trees, and checks
// that both return identical values and witnesses. Exits 1 on any mismatch.
#include <chrono>
#include <iostream>
#include <vector>

#include "hc/oracle.hpp"
#include "hc/tree.hpp"

int main() {
    using Clock = std::chrono::steady_clock;

    std::vector<hc::Tree> cases;
    for (hc::Tree& t : hc::enumerate_trees(8)) {
        if (t.max_degree() >= 3) cases.push_back(std::move(t));
    }
    for (unsigned long long seed = 1; seed <= 5; ++seed) {
        cases.push_back(hc::random_tree(9, seed));
    }

    hc::OracleBudget budget;
    budget.max_n = 10;

    double serial_ms = 0.0;
    double parallel_ms = 0.0;
    long long serial_nodes = 0;
    long long parallel_nodes = 0;
    int idx = 0;
    for (const hc::Tree& t : cases) {
        auto t0 = Clock::now();
        hc::OracleHcResult s = hc::brute_force_hc_serial(t, budget);
        auto t1 = Clock::now();
        hc::OracleHcResult p = hc::brute_force_hc(t, budget);
        auto t2 = Clock::now();
        serial_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
        parallel_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
        serial_nodes += s.nodes_explored;
        parallel_nodes += p.nodes_explored;
        if (s.value != p.value || s.witness.color != p.witness.color) {
            std::cerr << "mismatch on case " << idx << ": serial value " << s.value
                      << ", parallel value " << p.value << "\n";
            return 1;
        }
        ++idx;
    }
    std::cout << "cases " << idx << "\n";
    std::cout << "serial_ms " << serial_ms << "\n";
    std::cout << "parallel_ms " << parallel_ms << "\n";
    std::cout << "serial_nodes " << serial_nodes << "\n";
    std::cout << "parallel_nodes " << parallel_nodes << "\n";
    std::cout << "speedup " << (parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0) << "\n";
    std::cout << "agreement ok\n";
    return 0;
}
