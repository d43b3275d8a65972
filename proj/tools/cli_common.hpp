#pragma once

// Shared helpers for the command-line tools.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsr/csv.hpp"
#include "qsr/matrix.hpp"
#include "qsr/ranks.hpp"

namespace qsr::cli {

inline void write_distribution_csv(const Distribution& dist, const std::string& path) {
    std::ostringstream out;
    out << "node,score\n";
    for (int i = 0; i < dist.n(); ++i)
        out << i << ',' << format_double(dist.p[static_cast<std::size_t>(i)]) << '\n';
    write_text_file(path, out.str());
}

inline void write_curve_csv(const ProbabilityCurve& curve, const std::string& path) {
    std::ostringstream out;
    out << "tq,p_marked\n";
    for (const auto& pt : curve.points) out << pt.tq << ',' << format_double(pt.p) << '\n';
    write_text_file(path, out.str());
}

inline void write_trajectory_csv(const std::vector<Distribution>& trajectory, const std::string& path) {
    std::ostringstream out;
    out << "tc,node,prob\n";
    for (std::size_t tc = 0; tc < trajectory.size(); ++tc)
        for (int node = 0; node < trajectory[tc].n(); ++node)
            out << tc << ',' << node << ','
                << format_double(trajectory[tc].p[static_cast<std::size_t>(node)]) << '\n';
    write_text_file(path, out.str());
}

// Top-level exception barrier: tools print the failure and exit nonzero.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace qsr::cli
