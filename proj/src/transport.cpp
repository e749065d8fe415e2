#include "markovlyap/transport.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace markovlyap {

namespace {
constexpr double kMassDust = 1e-15;  // masses below this are not worth routing
}

TransportPlan solve_transport(const Eigen::VectorXd& supply, const Eigen::VectorXd& demand,
                              const Eigen::MatrixXd& cost) {
    const int n_rows = static_cast<int>(supply.size());
    const int n_cols = static_cast<int>(demand.size());
    if (cost.rows() != n_rows || cost.cols() != n_cols)
        throw std::invalid_argument("solve_transport: cost shape mismatch");

    std::vector<int> src, snk;
    for (int i = 0; i < n_rows; ++i)
        if (supply[i] > kMassDust) src.push_back(i);
    for (int j = 0; j < n_cols; ++j)
        if (demand[j] > kMassDust) snk.push_back(j);

    TransportPlan plan;
    plan.potentials_u = Eigen::VectorXd::Zero(n_rows);
    plan.potentials_v = Eigen::VectorXd::Zero(n_cols);
    if (src.empty() || snk.empty()) return plan;

    const int ns = static_cast<int>(src.size());
    const int nt = static_cast<int>(snk.size());
    const int n_nodes = ns + nt;  // sources first, then sinks

    std::vector<double> remaining(ns), deficit(nt);
    for (int a = 0; a < ns; ++a) remaining[a] = supply[src[a]];
    for (int b = 0; b < nt; ++b) deficit[b] = demand[snk[b]];

    Eigen::MatrixXd flow = Eigen::MatrixXd::Zero(ns, nt);
    std::vector<double> pot(n_nodes, 0.0);

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n_nodes);
    std::vector<int> parent(n_nodes);
    std::vector<char> done(n_nodes);

    auto edge_cost = [&](int a, int b) { return cost(src[a], snk[b]); };

    double total_left = 0.0;
    for (double r : remaining) total_left += r;

    // Successive shortest paths under reduced costs. Each round runs a dense
    // Dijkstra from all sources with remaining supply, augments to the
    // cheapest sink with remaining deficit, and shifts potentials so reduced
    // costs stay nonnegative.
    int guard = 2 * (ns + nt) + 8;
    while (total_left > kMassDust && guard-- > 0) {
        std::fill(dist.begin(), dist.end(), inf);
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(done.begin(), done.end(), 0);
        for (int a = 0; a < ns; ++a)
            if (remaining[a] > kMassDust) dist[a] = 0.0;

        for (int iter = 0; iter < n_nodes; ++iter) {
            int u = -1;
            double best = inf;
            for (int v = 0; v < n_nodes; ++v)
                if (!done[v] && dist[v] < best) {
                    best = dist[v];
                    u = v;
                }
            if (u < 0) break;
            done[u] = 1;
            if (u < ns) {
                const int a = u;
                for (int b = 0; b < nt; ++b) {
                    const int v = ns + b;
                    const double rc = edge_cost(a, b) - pot[u] + pot[v];
                    if (dist[u] + rc < dist[v] - 1e-18) {
                        dist[v] = dist[u] + rc;
                        parent[v] = u;
                    }
                }
            } else {
                const int b = u - ns;
                for (int a = 0; a < ns; ++a) {
                    if (flow(a, b) <= kMassDust) continue;  // backward edge needs carried flow
                    const double rc = -edge_cost(a, b) - pot[u] + pot[a];
                    if (dist[u] + rc < dist[a] - 1e-18) {
                        dist[a] = dist[u] + rc;
                        parent[a] = u;
                    }
                }
            }
        }

        int tb = -1;
        double best_sink = inf;
        for (int b = 0; b < nt; ++b)
            if (deficit[b] > kMassDust && dist[ns + b] < best_sink) {
                best_sink = dist[ns + b];
                tb = b;
            }
        if (tb < 0) throw std::runtime_error("solve_transport: infeasible flow (solver bug)");

        // Bottleneck along the path: terminal deficit, origin supply, and any
        // backward edge's carried flow.
        double delta = deficit[tb];
        int node = ns + tb;
        while (parent[node] >= 0) {
            const int p = parent[node];
            if (node < ns) delta = std::min(delta, flow(node, p - ns));  // used backward edge
            node = p;
        }
        delta = std::min(delta, remaining[node]);

        node = ns + tb;
        while (parent[node] >= 0) {
            const int p = parent[node];
            if (node >= ns) flow(p, node - ns) += delta;
            else flow(node, parent[node] - ns) -= delta;
            node = p;
        }
        remaining[node] -= delta;
        deficit[tb] -= delta;
        total_left -= delta;

        const double d_cap = best_sink;
        for (int v = 0; v < n_nodes; ++v) pot[v] -= std::min(dist[v], d_cap);
    }
    if (total_left > 1e-9) throw std::runtime_error("solve_transport: failed to route all mass");

    plan.cost = 0.0;
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < nt; ++b)
            if (flow(a, b) > kMassDust) {
                plan.cost += flow(a, b) * edge_cost(a, b);
                plan.flows.emplace_back(src[a], snk[b], flow(a, b));
            }
    for (int a = 0; a < ns; ++a) plan.potentials_u[src[a]] = pot[a];
    for (int b = 0; b < nt; ++b) plan.potentials_v[snk[b]] = -pot[ns + b];
    return plan;
}

}  // namespace markovlyap
