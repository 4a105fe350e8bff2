#pragma once

#include <utility>
#include <vector>

namespace steinerlab {

/// Small dense two-phase simplex for the piecewise-linear fixed-topology
/// subproblems (l1 / l_inf edge lengths). Minimization only.
class SimplexLP {
public:
    /// Returns the variable id. Free variables are split internally.
    int add_variable(double objective_coeff, bool nonnegative);

    /// sum(coeff * var) <= rhs
    void add_le(std::vector<std::pair<int, double>> terms, double rhs);

    struct Solution {
        bool feasible = false;
        double value = 0.0;
        std::vector<double> x;
        int iterations = 0;
    };

    Solution minimize() const;

private:
    struct Var {
        double cost;
        bool nonneg;
    };
    struct Row {
        std::vector<std::pair<int, double>> terms;
        double rhs;
    };
    std::vector<Var> vars_;
    std::vector<Row> rows_;
};

}  // namespace steinerlab
