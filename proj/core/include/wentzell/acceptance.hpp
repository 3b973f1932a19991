#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wentzell {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

CriterionResult criterion_brackets();
CriterionResult criterion_asymptotics();
CriterionResult criterion_orthonormality();
CriterionResult criterion_fdtd_oracle();
CriterionResult criterion_conservation();
CriterionResult criterion_causality();
CriterionResult criterion_reflection();
CriterionResult criterion_two_point();
CriterionResult criterion_commutator();
CriterionResult criterion_holography();
CriterionResult criterion_fig2();
CriterionResult criterion_source_relation();

struct AcceptanceCriterion {
    int id;
    std::function<CriterionResult()> run;
};

const std::vector<AcceptanceCriterion>& acceptance_criteria();

/// Runs every criterion; errors inside a criterion are reported as failures.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});

} // namespace wentzell
