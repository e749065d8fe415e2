#pragma once

#include <Eigen/Dense>
#include <tuple>
#include <vector>

namespace markovlyap {

// Exact solution of the finite transportation problem
//   minimize  sum_{i,j} flow[i][j] * cost(i,j)
//   subject to row sums = supply, column sums = demand, flow >= 0,
// where supply and demand are nonnegative with equal totals.
//
// `potentials_u` / `potentials_v` are optimal dual variables satisfying
// u[i] + v[j] <= cost(i,j) on supp(supply) x supp(demand), with equality on
// every carried edge. Together with `cost` they certify optimality:
//   cost == sum_i u[i] supply[i] + sum_j v[j] demand[j].
struct TransportPlan {
    double cost = 0.0;
    std::vector<std::tuple<int, int, double>> flows;  // (source index, sink index, mass)
    Eigen::VectorXd potentials_u;                     // size = supply.size(), 0 off-support
    Eigen::VectorXd potentials_v;                     // size = demand.size(), 0 off-support
};

// Successive-shortest-path min-cost flow (Dijkstra with node potentials).
// Exact for real-valued masses: every augmentation saturates a source or a
// sink, so at most |supp(supply)| + |supp(demand)| iterations run.
TransportPlan solve_transport(const Eigen::VectorXd& supply, const Eigen::VectorXd& demand,
                              const Eigen::MatrixXd& cost);

}  // namespace markovlyap
