#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qfl {

struct SuiteParams {
    int n = 4;
    std::uint64_t seed = 1;
    int samples = 20;  // orbit samples per forest
    int polys = 100;   // random polynomials for the borel suite
    int cone_n = 6;    // paving checks cones for every m <= max(n, cone_n)
    int jobs = 1;
};

struct Failure {
    std::string case_id;
    std::string detail;
};

struct Report {
    std::string suite;
    int n = 0;
    std::uint64_t seed = 0;
    long cases = 0;
    long failure_count = 0;
    std::vector<Failure> failures;  // first kMaxListedFailures
    std::map<std::string, long> stats;

    bool passed() const { return failure_count == 0 && cases > 0; }
};

constexpr std::size_t kMaxListedFailures = 100;

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// acceptance criterion checked by the suite
int suite_criterion(const std::string& name);
// throws std::invalid_argument for unknown names or out-of-range n
Report run_suite(const std::string& name, const SuiteParams& params);

// runs body(i) for i in [0, count) on up to jobs threads
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace qfl
