#include "netforge/net.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace netforge::net {

NetIncidence ols_to_incidence(const OlsPair& p) {
    const int k = p.first.order();
    NetIncidence n;
    n.k = k;
    n.points.reserve(static_cast<size_t>(k) * k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            n.points.push_back(ChiPoint{{i, j, p.first.at(i, j), p.second.at(i, j)}});
    std::sort(n.points.begin(), n.points.end());
    return n;
}

AxiomReport validate_net_axioms(const NetIncidence& n) {
    AxiomReport report;
    const int k = n.k;
    auto fail = [&](AxiomFailure f) {
        report.pass = false;
        report.failures.push_back(std::move(f));
    };

    if (static_cast<int>(n.points.size()) != k * k)
        fail({"point count", 0, 0, 0, 0,
              "|points| = " + std::to_string(n.points.size()) + ", expected " + std::to_string(k * k)});

    for (const ChiPoint& x : n.points)
        for (int c = 0; c < 4; ++c)
            if (x.lines[c] < 1 || x.lines[c] > k) {
                fail({"line index range", c + 1, 0, x.lines[c], 0, "line index out of 1..k"});
                return report;
            }

    // Definition axioms 1 and 2: for each unordered class pair (i, j) and
    // each (a, b), exactly one point uses line a of class i and line b of
    // class j.
    for (int ci = 0; ci < 4; ++ci)
        for (int cj = ci + 1; cj < 4; ++cj) {
            std::vector<int> count(static_cast<size_t>(k) * k, 0);
            for (const ChiPoint& x : n.points)
                ++count[(x.lines[ci] - 1) * k + (x.lines[cj] - 1)];
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) {
                    int c = count[(a - 1) * k + (b - 1)];
                    if (c != 1)
                        fail({c == 0 ? "missing intersection (axiom 1)"
                                     : "exactly one line (axiom 2)",
                              ci + 1, cj + 1, a, b,
                              "pair covered " + std::to_string(c) + " times"});
                }
        }
    return report;
}

OlsPair incidence_to_ols(const NetIncidence& n) {
    AxiomReport report = validate_net_axioms(n);
    if (!report.pass) {
        const AxiomFailure& f = report.failures.front();
        std::ostringstream msg;
        msg << "net axiom violation [" << f.axiom << "] classes (" << f.class_a << ","
            << f.class_b << ") lines (" << f.line_a << "," << f.line_b << "): " << f.detail;
        throw std::invalid_argument(msg.str());
    }
    const int k = n.k;
    std::vector<int> g1(static_cast<size_t>(k) * k), g2(g1.size());
    for (const ChiPoint& x : n.points) {
        g1[(x.lines[0] - 1) * k + (x.lines[1] - 1)] = x.lines[2];
        g2[(x.lines[0] - 1) * k + (x.lines[1] - 1)] = x.lines[3];
    }
    return OlsPair(LatinSquare::from_grid(k, std::move(g1)),
                   LatinSquare::from_grid(k, std::move(g2)));
}

}  // namespace netforge::net
