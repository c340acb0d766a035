#include "freestar/reports.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace freestar {

namespace {

std::string fmt_double(double x) {
    if (std::isnan(x)) return "nan";
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

nlohmann::json json_double(double x) {
    if (std::isnan(x)) return nullptr;
    return x;
}

nlohmann::json group_json(const HomologyGroup& g, unsigned dim) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const BigInt& d : g.torsion) torsion.push_back(d.str());
    return {{"dim", dim}, {"rank", g.free_rank}, {"torsion", torsion}};
}

}  // namespace

std::string sandwich_csv(const SandwichReport& report) {
    std::ostringstream os;
    os << "# freestar sandwich report: sphere=EXACT length counts, ball=CUMULATIVE counts\n"
       << "# u_strict=STRICT_PEAK, u_doubled=DOUBLED_PEAK_ALLOWED; sandwich columns test "
          "u <= count <= 2u per (convention x variant) pairing, none is asserted\n"
       << "# equality_star_rev enumerated up to n=" << report.enumeration_limit
       << ", transported through the mask bijection above\n"
       << "n,sphere,ball,u_strict,u_doubled,rhoades,sandwich_exact_strict,"
          "sandwich_exact_doubled,sandwich_cumulative_strict,sandwich_cumulative_doubled,"
          "equality_star_rev,equality_by_enumeration\n";
    for (const SandwichRow& r : report.rows) {
        os << r.n << ',' << r.sphere.str() << ',' << r.ball.str() << ',' << r.u_strict.str()
           << ',' << r.u_doubled.str() << ',' << fmt_double(r.rhoades) << ','
           << int(r.sandwich_exact_strict) << ',' << int(r.sandwich_exact_doubled) << ','
           << int(r.sandwich_cumulative_strict) << ',' << int(r.sandwich_cumulative_doubled)
           << ',' << int(r.eq_star_rev) << ',' << int(r.eq_by_enumeration) << '\n';
    }
    return os.str();
}

std::string sandwich_json(const SandwichReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SandwichRow& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"sphere", r.sphere.str()},
                        {"ball", r.ball.str()},
                        {"u_strict", r.u_strict.str()},
                        {"u_doubled", r.u_doubled.str()},
                        {"rhoades", json_double(r.rhoades)},
                        {"sandwich_exact_strict", r.sandwich_exact_strict},
                        {"sandwich_exact_doubled", r.sandwich_exact_doubled},
                        {"sandwich_cumulative_strict", r.sandwich_cumulative_strict},
                        {"sandwich_cumulative_doubled", r.sandwich_cumulative_doubled},
                        {"equality_star_rev", r.eq_star_rev},
                        {"equality_by_enumeration", r.eq_by_enumeration}});
    }
    nlohmann::json out{{"kind", "sandwich"},
                       {"conventions", {{"sphere", "EXACT"}, {"ball", "CUMULATIVE"}}},
                       {"n_max", report.n_max},
                       {"enumeration_limit", report.enumeration_limit},
                       {"rows", rows}};
    return out.dump(2) + "\n";
}

std::string rank_two_csv(const RankTwoReport& report) {
    std::ostringstream os;
    os << "# freestar rank-2 growth estimate: sphere=EXACT, ball=CUMULATIVE\n"
       << "# free_group_ball = 2*3^n - 1 is the cumulative lower bound\n"
       << "n,sphere,ball,ratio,free_group_ball,bound_ok\n";
    for (const RankTwoRow& r : report.rows) {
        os << r.n << ',' << r.sphere.str() << ',' << r.ball.str() << ',' << fmt_double(r.ratio)
           << ',' << r.free_group_ball.str() << ',' << int(r.bound_ok) << '\n';
    }
    return os.str();
}

std::string rank_two_json(const RankTwoReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const RankTwoRow& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"sphere", r.sphere.str()},
                        {"ball", r.ball.str()},
                        {"ratio", json_double(r.ratio)},
                        {"free_group_ball", r.free_group_ball.str()},
                        {"bound_ok", r.bound_ok}});
    }
    nlohmann::json out{{"kind", "rank2_growth"},
                       {"conventions", {{"sphere", "EXACT"}, {"ball", "CUMULATIVE"}}},
                       {"n_max", report.n_max},
                       {"rows", rows}};
    return out.dump(2) + "\n";
}

std::string growth_plot(const GrowthTable& table) {
    std::ostringstream os;
    os << "# freestar growth plot: convention="
       << (table.convention == CountConvention::Exact ? "EXACT" : "CUMULATIVE")
       << ", columns: n <tab> log2(count)\n";
    for (std::size_t n = 0; n < table.counts.size(); ++n) {
        const double v = table.counts[n] > 0 ? log2_approx(table.counts[n]) : 0.0;
        os << n << '\t' << fmt_double(v) << '\n';
    }
    return os.str();
}

std::string homology_json(const HomologyReport& report) {
    nlohmann::json groups = nlohmann::json::array();
    for (unsigned k = 0; k < report.groups.size(); ++k)
        groups.push_back(group_json(report.groups[k], k));
    nlohmann::json morse_groups = nlohmann::json::array();
    for (unsigned k = 0; k < report.morse_groups.size(); ++k)
        morse_groups.push_back(group_json(report.morse_groups[k], k));

    nlohmann::json out{
        {"truncation", report.truncation},
        {"dim_bound", report.dim_bound},
        {"groups", groups},
        {"morse",
         {{"critical_counts", report.critical_counts},
          {"groups", morse_groups},
          {"dimension3_empty", report.morse_dimension3_empty}}},
        {"matching", {{"passed", report.matching.passed()}, {"failures", report.matching.failures}}}};
    return out.dump(2) + "\n";
}

std::string rules_dump(const std::vector<Rule>& rules) {
    std::ostringstream os;
    for (const Rule& r : rules) os << r.lhs.text() << " -> " << r.rhs.text() << '\n';
    return os.str();
}

}  // namespace freestar
